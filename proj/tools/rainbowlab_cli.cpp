// rainbowlab command-line front end. Talks to the engine only through the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rainbowlab/rainbowlab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

const char* kCsvHelp =
    "CSV columns: p,k,predicted,brute,agree,nodes,ms\n"
    "  p          modulus (prime unless --n was used)\n"
    "  predicted  closed-form rainbow number, blank outside theorem scope\n"
    "  brute      exhaustive-search value, '>R' if above --max-r, 'exceeded' on budget\n"
    "  agree      yes | no | n/a | exceeded\n"
    "  nodes      search nodes explored (deterministic)\n"
    "  ms         wall time";

struct Range {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

// "7" or "5..13".
std::optional<Range> parse_range(const std::string& text) {
  auto to_u64 = [](const std::string& s) -> std::optional<std::uint64_t> {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    return std::stoull(s);
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = to_u64(text);
    if (!v) return std::nullopt;
    return Range{*v, *v};
  }
  const auto lo = to_u64(text.substr(0, dots));
  const auto hi = to_u64(text.substr(dots + 2));
  if (!lo || !hi || *lo > *hi) return std::nullopt;
  return Range{*lo, *hi};
}

struct CString {
  char* ptr = nullptr;
  ~CString() { rl_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EngineError : public std::runtime_error {
 public:
  EngineError(rl_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  rl_status status;
};

void check(rl_status status) {
  if (status != RL_OK) throw EngineError(status, rl_last_error());
}

Range require_range(const std::string& text, const char* flag) {
  const auto r = parse_range(text);
  if (!r) throw UsageError(std::string("invalid range for ") + flag + ": '" + text + "'");
  return *r;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open '" + path + "' for writing");
  out << content;
}

// Insert "_n{n}_k{k}" before the extension when a command covers several pairs.
std::string per_pair_path(const std::string& path, std::uint64_t n, std::uint64_t k, bool multiple) {
  if (!multiple) return path;
  const auto dot = path.find_last_of('.');
  const auto slash = path.find_last_of('/');
  const std::string suffix = "_n" + std::to_string(n) + "_k" + std::to_string(k);
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + suffix;
  return path.substr(0, dot) + suffix + path.substr(dot);
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
  } else {
    write_file(path, content);
  }
}

struct SearchFlags {
  std::uint64_t budget = 1'000'000'000;
  unsigned threads = 0;
  unsigned split_depth = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--budget", budget, "search node budget")->capture_default_str();
    cmd->add_option("--threads", threads, "worker threads (0 = auto; RAINBOWLAB_THREADS overrides)");
    cmd->add_option("--split-depth", split_depth, "DFS prefix depth used to split work (0 = auto)");
  }

  rl_search_options options() const {
    rl_search_options o;
    rl_search_options_default(&o);
    o.node_budget = budget;
    o.threads = threads;
    o.split_depth = split_depth;
    return o;
  }
};

std::vector<std::uint8_t> parse_colors(const std::string& text) {
  std::vector<std::uint8_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || std::stoul(item) > 15) {
      throw UsageError("invalid color list '" + text + "'");
    }
    out.push_back(static_cast<std::uint8_t>(std::stoul(item)));
  }
  if (out.empty()) throw UsageError("empty color list");
  return out;
}

struct ColoringHandle {
  rl_coloring* ptr = nullptr;
  ~ColoringHandle() { rl_coloring_free(ptr); }
};

// From --colors "0,1,1,..." or a JSON file {"n","k","colors"}.
void load_coloring(const std::string& colors, const std::string& file, unsigned r, ColoringHandle& out) {
  if (!colors.empty() == !file.empty()) throw UsageError("give exactly one of --colors or --coloring");
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw UsageError("cannot read '" + file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    check(rl_coloring_from_json(buf.str().c_str(), &out.ptr));
    return;
  }
  const auto c = parse_colors(colors);
  unsigned max_color = 0;
  for (auto v : c) max_color = std::max<unsigned>(max_color, v);
  check(rl_coloring_create(c.data(), c.size(), r == 0 ? max_color + 1 : r, &out.ptr));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rainbowlab: rainbow solutions of x - y = z^k over Z_n and prefixes of N"};
  app.set_version_flag("--version", std::string("rainbowlab ") + rl_version());
  app.require_subcommand(1);

  // digraph
  auto* digraph = app.add_subcommand("digraph", "power digraph a -> a^k mod n: DOT and JSON summary");
  std::string dg_n, dg_k, dg_dot, dg_json;
  bool dg_cluster = false;
  digraph->add_option("--n", dg_n, "modulus or range a..b")->required();
  digraph->add_option("--k", dg_k, "exponent or range a..b")->required();
  digraph->add_option("--dot", dg_dot, "write DOT here (suffixed per pair for ranges)");
  digraph->add_option("--json", dg_json, "write JSON summary here (default: stdout)");
  digraph->add_flag("--cluster", dg_cluster, "group components into DOT clusters");

  // rb
  auto* rb = app.add_subcommand("rb", "rainbow numbers by exhaustive search vs the closed form");
  rb->footer(kCsvHelp);
  std::string rb_p, rb_n, rb_k, rb_csv, rb_json;
  unsigned rb_max_r = 4;
  bool rb_strict = false;
  SearchFlags rb_search;
  auto* rb_p_opt = rb->add_option("--p", rb_p, "prime or range a..b (primes only)");
  rb->add_option("--n", rb_n, "modulus or range a..b (all moduli >= 3)")->excludes(rb_p_opt);
  rb->add_option("--k", rb_k, "exponent or range a..b")->required();
  rb->add_option("--max-r", rb_max_r, "largest r searched")->capture_default_str();
  rb->add_option("--csv", rb_csv, "write the CSV table here (default: stdout)");
  rb->add_option("--json", rb_json, "write the JSON artifact here");
  rb->add_flag("--strict", rb_strict, "exit 1 when a search exceeds its budget");
  rb_search.add_to(rb);

  // classify
  auto* classify = app.add_subcommand("classify", "structural report for a coloring of Z_p");
  std::string cl_colors, cl_file, cl_json;
  std::uint64_t cl_k = 2;
  unsigned cl_r = 0;
  classify->add_option("--colors", cl_colors, "comma-separated colors of 0..p-1");
  classify->add_option("--coloring", cl_file, "coloring JSON file {\"n\",\"k\",\"colors\"}");
  classify->add_option("--k", cl_k, "exponent")->required();
  classify->add_option("--r", cl_r, "declared color count (default: max color + 1)");
  classify->add_option("--json", cl_json, "write the report here (default: stdout)");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "all canonical rainbow-free exact r-colorings of Z_n");
  std::uint64_t en_n = 0, en_k = 2;
  unsigned en_r = 3;
  std::string en_json;
  SearchFlags en_search;
  enumerate->add_option("--n", en_n, "modulus")->required();
  enumerate->add_option("--k", en_k, "exponent")->required();
  enumerate->add_option("--r", en_r, "number of colors")->capture_default_str();
  enumerate->add_option("--json", en_json, "write JSON here (default: stdout)");
  en_search.add_to(enumerate);

  // prefix
  auto* prefix = app.add_subcommand("prefix", "prefix-of-N experiments: density trials or a lifted coloring");
  std::uint64_t px_k = 2;
  std::size_t px_N = 200, px_trials = 1000;
  std::uint64_t px_seed = 0;
  double px_margin = 0.02;
  unsigned px_threads = 0, px_r = 0;
  std::string px_colors, px_file, px_json, px_csv;
  prefix->add_option("--k", px_k, "exponent")->capture_default_str();
  prefix->add_option("--N", px_N, "prefix length")->capture_default_str();
  prefix->add_option("--trials", px_trials, "random colorings in the density experiment")->capture_default_str();
  prefix->add_option("--seed", px_seed, "experiment seed")->capture_default_str();
  prefix->add_option("--margin", px_margin, "density margin above the threshold")->capture_default_str();
  prefix->add_option("--threads", px_threads, "worker threads (0 = auto)");
  prefix->add_option("--colors", px_colors, "lift this Z_n coloring instead of running trials");
  prefix->add_option("--coloring", px_file, "lift the coloring in this JSON file");
  prefix->add_option("--r", px_r, "declared color count for --colors");
  prefix->add_option("--json", px_json, "write JSON here (default: stdout)");
  prefix->add_option("--csv", px_csv, "density trace n,count_R,count_G,count_B (lift mode)");

  // verify-all
  auto* verify = app.add_subcommand("verify-all", "run every invariant check; exit 1 on any failure");
  rl_verify_config vcfg;
  rl_verify_config_default(&vcfg);
  std::string vf_json;
  bool vf_negative = false;
  SearchFlags vf_search;
  verify->add_option("--p-max", vcfg.p_max, "largest prime in the digraph sweeps")->capture_default_str();
  verify->add_option("--k-max", vcfg.k_max, "largest exponent in the digraph sweeps")->capture_default_str();
  verify->add_option("--seed", vcfg.seed, "density experiment seed")->capture_default_str();
  verify->add_option("--trials", vcfg.density_trials, "density experiment trials")->capture_default_str();
  verify->add_flag("--self-test-negative", vf_negative, "corrupt one coloring to prove the harness can fail");
  verify->add_option("--json", vf_json, "write the JSON report here");
  vf_search.add_to(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*digraph) {
      const Range nr = require_range(dg_n, "--n");
      const Range kr = require_range(dg_k, "--k");
      const bool multiple = nr.lo != nr.hi || kr.lo != kr.hi;
      for (std::uint64_t n = nr.lo; n <= nr.hi; ++n) {
        for (std::uint64_t k = kr.lo; k <= kr.hi; ++k) {
          rl_digraph* raw = nullptr;
          if (rl_status s = rl_digraph_build(n, k, &raw); s != RL_OK) throw UsageError(rl_last_error());
          std::unique_ptr<rl_digraph, decltype(&rl_digraph_free)> g(raw, rl_digraph_free);
          CString json;
          check(rl_digraph_json(g.get(), &json.ptr));
          emit(dg_json.empty() ? "" : per_pair_path(dg_json, n, k, multiple), json.str());
          if (!dg_dot.empty()) {
            CString dot;
            check(rl_digraph_dot(g.get(), dg_cluster ? 1 : 0, &dot.ptr));
            write_file(per_pair_path(dg_dot, n, k, multiple), dot.str());
          }
        }
      }
      return kExitOk;
    }

    if (*rb) {
      if (rb_p.empty() == rb_n.empty()) throw UsageError("give exactly one of --p or --n");
      const Range mr = require_range(rb_p.empty() ? rb_n : rb_p, rb_p.empty() ? "--n" : "--p");
      const Range kr = require_range(rb_k, "--k");
      const rl_search_options opts = rb_search.options();
      CString json, csv;
      rl_rb_summary summary{};
      if (rl_status s = rl_rb_table(mr.lo, mr.hi, rb_p.empty() ? 0 : 1, kr.lo, kr.hi, rb_max_r, &opts, &json.ptr,
                                    &csv.ptr, &summary);
          s != RL_OK) {
        if (s == RL_ERR_DOMAIN || s == RL_ERR_ARGUMENT) throw UsageError(rl_last_error());
        throw EngineError(s, rl_last_error());
      }
      emit(rb_csv, csv.str());
      if (!rb_json.empty()) write_file(rb_json, json.str());
      if (summary.exceeded > 0) {
        std::cerr << "warning: " << summary.exceeded << " row(s) exceeded the node budget\n";
        if (rb_strict) return kExitFailure;
      }
      if (summary.disagreements > 0) {
        std::cerr << "error: " << summary.disagreements << " row(s) disagree with the closed form\n";
        return kExitFailure;
      }
      return kExitOk;
    }

    if (*classify) {
      ColoringHandle c;
      try {
        load_coloring(cl_colors, cl_file, cl_r, c);
      } catch (const EngineError& e) {
        throw UsageError(e.what());
      }
      CString json;
      if (rl_status s = rl_coloring_classify_json(c.ptr, cl_k, &json.ptr); s != RL_OK) {
        if (s == RL_ERR_DOMAIN) throw UsageError(rl_last_error());
        throw EngineError(s, rl_last_error());
      }
      emit(cl_json, json.str());
      return kExitOk;
    }

    if (*enumerate) {
      const rl_search_options opts = en_search.options();
      CString json;
      std::size_t count = 0;
      if (rl_status s = rl_enumerate_json(en_n, en_k, en_r, &opts, &json.ptr, &count); s != RL_OK) {
        if (s == RL_ERR_DOMAIN) throw UsageError(rl_last_error());
        throw EngineError(s, rl_last_error());
      }
      emit(en_json, json.str());
      return kExitOk;
    }

    if (*prefix) {
      if (!px_colors.empty() || !px_file.empty()) {
        ColoringHandle c;
        try {
          load_coloring(px_colors, px_file, px_r, c);
        } catch (const EngineError& e) {
          throw UsageError(e.what());
        }
        CString json, csv;
        if (rl_status s = rl_prefix_analyze(c.ptr, px_k, px_N, &json.ptr, &csv.ptr); s != RL_OK) {
          if (s == RL_ERR_DOMAIN) throw UsageError(rl_last_error());
          throw EngineError(s, rl_last_error());
        }
        emit(px_json, json.str());
        if (!px_csv.empty()) write_file(px_csv, csv.str());
        return kExitOk;
      }
      rl_density_config dc{px_k, px_N, px_trials, px_seed, px_margin, px_threads};
      CString json;
      std::size_t exceptions = 0;
      if (rl_status s = rl_density_experiment_json(&dc, &json.ptr, &exceptions); s != RL_OK) {
        if (s == RL_ERR_DOMAIN) throw UsageError(rl_last_error());
        throw EngineError(s, rl_last_error());
      }
      emit(px_json, json.str());
      if (exceptions > 0) {
        std::cerr << "found " << exceptions << " dense coloring(s) without a rainbow solution\n";
        return kExitFailure;
      }
      return kExitOk;
    }

    if (*verify) {
      vcfg.self_test_negative = vf_negative ? 1 : 0;
      vcfg.search = vf_search.options();
      CString json;
      int all_passed = 0;
      check(rl_verify_all_json(&vcfg, &json.ptr, &all_passed));
      if (!vf_json.empty()) {
        write_file(vf_json, json.str());
      } else {
        std::cout << json.str();
      }
      std::cerr << (all_passed ? "all checks passed\n" : "invariant check FAILED\n");
      return all_passed ? kExitOk : kExitFailure;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EngineError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

#include <algorithm>
#include <chrono>
#include <cstring>
#include <exception>
#include <optional>
#include <string>

#include "rainbowlab/classifier.hpp"
#include "rainbowlab/nat_prefix.hpp"
#include "rainbowlab/rainbow_search.hpp"
#include "rainbowlab/rainbowlab.h"
#include "rainbowlab/report.hpp"
#include "rainbowlab/verify.hpp"

struct rl_digraph {
  rainbowlab::PowerDigraph graph;
};

struct rl_coloring {
  rainbowlab::Coloring coloring;
};

namespace {

using namespace rainbowlab;
using report::Json;

thread_local std::string g_last_error;

rl_status fail(rl_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
rl_status guarded(F&& body) {
  try {
    return body();
  } catch (const DomainError& e) {
    return fail(RL_ERR_DOMAIN, e.what());
  } catch (const BudgetExceeded& e) {
    return fail(RL_ERR_BUDGET, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(RL_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(RL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RL_ERR_INTERNAL, "unknown exception");
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

SearchOptions to_options(const rl_search_options* o) {
  SearchOptions s;
  if (o != nullptr) {
    s.node_budget = o->node_budget;
    s.threads = o->threads;
    s.split_depth = o->split_depth;
  }
  return s;
}

// Thread count never affects results, so it stays out of recorded configs.
Json options_json(const SearchOptions& s) {
  return Json{{"node_budget", s.node_budget}, {"split_depth", s.split_depth}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

extern "C" {

const char* rl_version(void) { return report::kToolVersion; }

const char* rl_last_error(void) { return g_last_error.c_str(); }

void rl_string_free(char* s) { delete[] s; }

void rl_search_options_default(rl_search_options* out) {
  if (out == nullptr) return;
  const SearchOptions s;
  out->node_budget = s.node_budget;
  out->threads = s.threads;
  out->split_depth = s.split_depth;
}

int rl_is_prime(uint64_t n) { return is_prime(n) ? 1 : 0; }

rl_status rl_factorize(uint64_t n, uint64_t* primes, unsigned* exponents, size_t capacity, size_t* count) {
  if (count == nullptr) return fail(RL_ERR_ARGUMENT, "count is null");
  return guarded([&] {
    const auto f = factorize(n);
    *count = f.factors.size();
    if (f.factors.size() > capacity) return fail(RL_ERR_BUFFER, "factor buffer too small");
    if (f.factors.size() > 0 && (primes == nullptr || exponents == nullptr)) return fail(RL_ERR_ARGUMENT, "output buffer is null");
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      primes[i] = f.factors[i].prime;
      exponents[i] = f.factors[i].exponent;
    }
    return RL_OK;
  });
}

rl_status rl_multiplicative_order(uint64_t a, uint64_t p, uint64_t* order) {
  if (order == nullptr) return fail(RL_ERR_ARGUMENT, "order is null");
  return guarded([&] {
    *order = multiplicative_order(a, p);
    return RL_OK;
  });
}

rl_status rl_t_decomposition(uint64_t m, uint64_t k, uint64_t* t, uint64_t* w) {
  if (t == nullptr || w == nullptr) return fail(RL_ERR_ARGUMENT, "output is null");
  return guarded([&] {
    const auto td = t_decomposition(m, k);
    *t = td.t;
    *w = td.w;
    return RL_OK;
  });
}

rl_status rl_support_condition(uint64_t p, uint64_t k, int* holds) {
  if (holds == nullptr) return fail(RL_ERR_ARGUMENT, "holds is null");
  return guarded([&] {
    *holds = support_condition(p, k) ? 1 : 0;
    return RL_OK;
  });
}

rl_status rl_frobenius_bound(uint64_t i, uint64_t j, int64_t* bound) {
  if (bound == nullptr) return fail(RL_ERR_ARGUMENT, "bound is null");
  return guarded([&] {
    *bound = frobenius_bound(i, j);
    return RL_OK;
  });
}

int rl_is_fermat_prime(uint64_t p) { return is_fermat_prime(p) ? 1 : 0; }

rl_status rl_digraph_build(uint64_t n, uint64_t k, rl_digraph** out) {
  if (out == nullptr) return fail(RL_ERR_ARGUMENT, "out is null");
  *out = nullptr;
  return guarded([&] {
    *out = new rl_digraph{PowerDigraph::build(n, k)};
    return RL_OK;
  });
}

void rl_digraph_free(rl_digraph* g) { delete g; }

uint64_t rl_digraph_order(const rl_digraph* g) { return g ? g->graph.n() : 0; }

size_t rl_digraph_component_count(const rl_digraph* g) { return g ? g->graph.component_count() : 0; }

size_t rl_digraph_cycle_vertex_count(const rl_digraph* g) { return g ? cycle_vertices(g->graph).size() : 0; }

namespace {

rl_status vertex_query(const rl_digraph* g, uint64_t a, const void* out) {
  if (g == nullptr || out == nullptr) return fail(RL_ERR_ARGUMENT, "null argument");
  if (a >= g->graph.n()) return fail(RL_ERR_DOMAIN, "vertex out of range");
  return RL_OK;
}

}  // namespace

rl_status rl_digraph_successor(const rl_digraph* g, uint64_t a, uint64_t* out) {
  if (rl_status s = vertex_query(g, a, out); s != RL_OK) return s;
  *out = g->graph.successor(static_cast<Vertex>(a));
  return RL_OK;
}

rl_status rl_digraph_component_of(const rl_digraph* g, uint64_t a, uint64_t* out) {
  if (rl_status s = vertex_query(g, a, out); s != RL_OK) return s;
  *out = g->graph.component_of(static_cast<Vertex>(a));
  return RL_OK;
}

rl_status rl_digraph_is_cycle_vertex(const rl_digraph* g, uint64_t a, int* out) {
  if (rl_status s = vertex_query(g, a, out); s != RL_OK) return s;
  *out = g->graph.is_cycle_vertex(static_cast<Vertex>(a)) ? 1 : 0;
  return RL_OK;
}

rl_status rl_digraph_dot(const rl_digraph* g, int cluster_components, char** out) {
  if (g == nullptr || out == nullptr) return fail(RL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup_string(export_dot(g->graph, cluster_components != 0));
    return RL_OK;
  });
}

rl_status rl_digraph_json(const rl_digraph* g, char** out) {
  if (g == nullptr || out == nullptr) return fail(RL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    Json j = report::artifact_header(Json{{"n", g->graph.n()}, {"k", g->graph.k()}}, 0);
    j["digraph"] = report::digraph_summary(g->graph);
    *out = dup_string(dump(j));
    return RL_OK;
  });
}

rl_status rl_component_prediction(uint64_t p, uint64_t k, rl_component_kind* kind) {
  if (kind == nullptr) return fail(RL_ERR_ARGUMENT, "kind is null");
  return guarded([&] {
    *kind = static_cast<rl_component_kind>(component_prediction(p, k).kind);
    return RL_OK;
  });
}

rl_status rl_coloring_create(const uint8_t* colors, size_t n, unsigned r, rl_coloring** out) {
  if (out == nullptr || (colors == nullptr && n > 0)) return fail(RL_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new rl_coloring{Coloring(std::vector<Color>(colors, colors + n), r)};
    return RL_OK;
  });
}

rl_status rl_coloring_from_json(const char* json, rl_coloring** out) {
  if (json == nullptr || out == nullptr) return fail(RL_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new rl_coloring{report::coloring_from_json(Json::parse(json))};
    return RL_OK;
  });
}

void rl_coloring_free(rl_coloring* c) { delete c; }

size_t rl_coloring_size(const rl_coloring* c) { return c ? c->coloring.size() : 0; }

int rl_coloring_is_exact(const rl_coloring* c) { return c && is_exact(c->coloring) ? 1 : 0; }

rl_status rl_coloring_find_rainbow(const rl_coloring* c, uint64_t k, int* found, uint64_t xyz[3]) {
  if (c == nullptr || found == nullptr || xyz == nullptr) return fail(RL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto cert = find_rainbow_mod(c->coloring, k);
    *found = cert ? 1 : 0;
    if (cert) {
      xyz[0] = cert->x;
      xyz[1] = cert->y;
      xyz[2] = cert->z;
    }
    return RL_OK;
  });
}

rl_status rl_coloring_classify_json(const rl_coloring* c, uint64_t k, char** out) {
  if (c == nullptr || out == nullptr) return fail(RL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto g = PowerDigraph::build(c->coloring.size(), k);
    const auto rep = structural_check(c->coloring, g);
    const auto cert = find_rainbow_mod(c->coloring, k);
    Json j = report::artifact_header(Json{{"n", c->coloring.size()}, {"k", k}}, 0);
    j["coloring"] = report::to_json(c->coloring, k);
    j["exact"] = is_exact(c->coloring);
    j["structural"] = report::to_json(rep);
    j["rainbow_free"] = !cert;
    j["certificate"] = cert ? report::to_json(*cert) : Json(nullptr);
    // The classification applies to exact 3-colorings.
    const bool applies = is_exact(c->coloring) && c->coloring.r() == 3;
    j["classification_applies"] = applies;
    if (applies) j["classification_consistent"] = rep.overall == !cert;
    *out = dup_string(dump(j));
    return RL_OK;
  });
}

rl_status rl_rb_table(uint64_t lo, uint64_t hi, int primes_only, uint64_t k_lo, uint64_t k_hi, unsigned max_r,
                      const rl_search_options* options, char** json_out, char** csv_out, rl_rb_summary* summary) {
  if (json_out == nullptr || csv_out == nullptr || summary == nullptr) return fail(RL_ERR_ARGUMENT, "null argument");
  if (lo > hi || k_lo > k_hi) return fail(RL_ERR_DOMAIN, "empty range");
  return guarded([&] {
    const SearchOptions opts = to_options(options);
    Json config{{"modulus_range", {lo, hi}}, {"primes_only", primes_only != 0}, {"k_range", {k_lo, k_hi}},
                {"max_r", max_r}, {"search", options_json(opts)}};
    Json j = report::artifact_header(config, 0);
    j["results"] = Json::array();
    Json timing = Json::array();
    std::string csv = report::rb_csv_header();
    *summary = rl_rb_summary{};
    for (uint64_t n = lo; n <= hi; ++n) {
      if (primes_only && !is_prime(n)) continue;
      for (uint64_t k = k_lo; k <= k_hi; ++k) {
        const auto start = std::chrono::steady_clock::now();
        const auto res = rb_bruteforce(n, k, max_r, opts);
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        j["results"].push_back(report::to_json(res));
        timing.push_back(Json{{"n", n}, {"k", k}, {"wall_ms", ms}});
        csv += report::rb_csv_row(res, ms);
        ++summary->rows;
        const std::string agree = report::rb_agreement(res);
        if (agree == "yes") ++summary->agreements;
        if (agree == "no") ++summary->disagreements;
        if (agree == "exceeded") ++summary->exceeded;
        if (!res.predicted) ++summary->unpredicted;
      }
    }
    if (summary->rows == 0) return fail(RL_ERR_DOMAIN, "range contains no admissible modulus");
    j["summary"] = Json{{"rows", summary->rows},
                        {"agreements", summary->agreements},
                        {"disagreements", summary->disagreements},
                        {"exceeded", summary->exceeded},
                        {"unpredicted", summary->unpredicted}};
    j["timing"] = std::move(timing);
    *json_out = dup_string(dump(j));
    *csv_out = dup_string(csv);
    return RL_OK;
  });
}

rl_status rl_rb_predicted(uint64_t p, uint64_t k, unsigned* value, int* in_scope) {
  if (value == nullptr || in_scope == nullptr) return fail(RL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto v = rb_predicted(p, k);
    *in_scope = v ? 1 : 0;
    *value = v.value_or(0);
    return RL_OK;
  });
}

rl_status rl_enumerate_json(uint64_t n, uint64_t k, unsigned r, const rl_search_options* options, char** out,
                            size_t* count) {
  if (out == nullptr || count == nullptr) return fail(RL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const SearchOptions opts = to_options(options);
    const auto en = enumerate_rainbow_free(n, k, r, opts);
    Json j = report::artifact_header(Json{{"n", n}, {"k", k}, {"r", r}, {"search", options_json(opts)}}, 0);
    j["canonical_count"] = en.colorings.size();
    j["labeled_count"] = en.labeled_count();
    j["nodes_explored"] = en.nodes;
    const bool prime = n >= 3 && is_prime(n);
    const bool check_structure = prime && r == 3;
    std::optional<PowerDigraph> g;
    if (check_structure) g = PowerDigraph::build(n, k);
    std::size_t min_class = n;
    j["colorings"] = Json::array();
    for (const auto& c : en.colorings) {
      Json e = report::to_json(c, k);
      e["class_sizes"] = c.class_sizes();
      min_class = std::min(min_class, c.min_class_size());
      if (check_structure) e["structural_overall"] = structural_check(c, *g).overall;
      j["colorings"].push_back(std::move(e));
    }
    j["min_class_size"] = en.colorings.empty() ? Json(nullptr) : Json(min_class);
    if (n % 2 == 1) j["min_class_bound"] = n / smallest_prime_factor(n);
    *count = en.colorings.size();
    *out = dup_string(dump(j));
    return RL_OK;
  });
}

rl_status rl_density_experiment_json(const rl_density_config* config, char** out, size_t* exceptions) {
  if (config == nullptr || out == nullptr || exceptions == nullptr) return fail(RL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    DensityExperimentConfig cfg{config->k, config->N, config->trials, config->seed, config->margin, config->threads};
    const auto rep = density_experiment(cfg);
    Json j = report::artifact_header(
        Json{{"k", cfg.k}, {"N", cfg.N}, {"trials", cfg.trials}, {"margin", cfg.margin}}, cfg.seed);
    j["experiment"] = report::to_json(rep);
    *exceptions = rep.without_rainbow;
    *out = dup_string(dump(j));
    return RL_OK;
  });
}

rl_status rl_prefix_analyze(const rl_coloring* c, uint64_t k, size_t N, char** json_out, char** csv_out) {
  if (c == nullptr || json_out == nullptr || csv_out == nullptr) return fail(RL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto prefix = lift(c->coloring, N);
    const auto cert = find_rainbow_prefix(prefix, k);
    const auto dominant = dominant_colors(prefix);
    const auto prof = density_profile(prefix, k);
    Json j = report::artifact_header(Json{{"n", c->coloring.size()}, {"k", k}, {"N", N}}, 0);
    j["source"] = report::to_json(c->coloring, k);
    j["rainbow"] = cert ? Json{{"x", cert->x}, {"y", cert->y}, {"z", cert->z}} : Json(nullptr);
    j["dominant_colors"] = std::vector<unsigned>(dominant.begin(), dominant.end());
    if (prefix.length() >= 1 && std::ranges::find(dominant, prefix(1)) != dominant.end()) {
      j["shift_violations"] = string_shift_check(prefix, k, prefix(1)).size();
    }
    j["runs"] = string_decomposition(prefix).size();
    Json dens = Json::array();
    for (const auto& d : prof.final_densities) dens.push_back(std::to_string(d.numerator()) + "/" + std::to_string(d.denominator()));
    j["final_densities"] = std::move(dens);
    j["threshold"] = std::to_string(prof.threshold.numerator()) + "/" + std::to_string(prof.threshold.denominator());
    Json pairs = Json::array();
    for (unsigned col = 0; col < prefix.r(); ++col) {
      const auto pair = coprime_pair_in_class(prefix, static_cast<Color>(col));
      pairs.push_back(pair ? Json{pair->first, pair->second} : Json(nullptr));
    }
    j["coprime_pairs"] = std::move(pairs);
    *json_out = dup_string(dump(j));
    *csv_out = dup_string(density_trace_csv(prof));
    return RL_OK;
  });
}

void rl_verify_config_default(rl_verify_config* out) {
  if (out == nullptr) return;
  const VerifyConfig v;
  out->p_max = v.p_max;
  out->k_max = v.k_max;
  out->lift_length = v.lift_length;
  out->density_trials = v.density_trials;
  out->seed = v.seed;
  out->self_test_negative = 0;
  rl_search_options_default(&out->search);
}

rl_status rl_verify_all_json(const rl_verify_config* config, char** out, int* all_passed) {
  if (config == nullptr || out == nullptr || all_passed == nullptr) return fail(RL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    VerifyConfig v;
    v.p_max = config->p_max;
    v.k_max = config->k_max;
    v.lift_length = config->lift_length;
    v.density_trials = config->density_trials;
    v.seed = config->seed;
    v.self_test_negative = config->self_test_negative != 0;
    v.search = to_options(&config->search);
    const auto results = verify_all(v);
    Json j = report::artifact_header(Json{{"p_max", v.p_max},
                                          {"k_max", v.k_max},
                                          {"lift_length", v.lift_length},
                                          {"density_trials", v.density_trials},
                                          {"self_test_negative", v.self_test_negative},
                                          {"search", options_json(v.search)}},
                                     v.seed);
    j["checks"] = Json::array();
    bool ok = true;
    for (const auto& r : results) {
      ok = ok && r.passed;
      j["checks"].push_back(
          Json{{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"failures", r.failures}, {"detail", r.detail}});
    }
    j["all_passed"] = ok;
    *all_passed = ok ? 1 : 0;
    *out = dup_string(dump(j));
    return RL_OK;
  });
}

}  // extern "C"

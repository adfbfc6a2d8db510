#include "rainbowlab/rainbow_search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>

namespace rainbowlab {

unsigned resolve_threads(unsigned requested) {
  if (const char* env = std::getenv("RAINBOWLAB_THREADS")) {
    std::string_view text(env);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) return value;
  }
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::RainbowFreeWitness: return "rainbow_free_witness";
    case Verdict::Exhausted: return "exhausted";
    case Verdict::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

bool RbResult::budget_exceeded() const {
  return std::ranges::any_of(evidence, [](const RoundEvidence& e) { return e.verdict == Verdict::BudgetExceeded; });
}

u64 RbResult::nodes_explored() const {
  u64 total = 0;
  for (const auto& e : evidence) total += e.nodes;
  return total;
}

const Coloring* RbResult::last_witness() const {
  for (auto it = evidence.rbegin(); it != evidence.rend(); ++it) {
    if (it->witness) return &*it->witness;
  }
  return nullptr;
}

u64 Enumeration::labeled_count() const {
  u64 fact = 1;
  for (unsigned i = 2; i <= r; ++i) fact *= i;
  return colorings.size() * fact;
}

namespace {

// For each residue m, the pairs (u, v) with u, v < m such that {u, v, m} are
// the three distinct entries of some solution x - y = z^k. Assigning residues
// in increasing order, a rainbow appears exactly when the new residue m and
// one of its pairs carry three distinct colors.
class SolutionIndex {
 public:
  SolutionIndex(u64 n, u64 k) : offsets_(n + 1, 0) {
    const PowerTable powers(n, k);
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> by_max(n);
    for (std::uint32_t z = 0; z < n; ++z) {
      for (std::uint32_t y = 0; y < n; ++y) {
        const std::uint32_t x = static_cast<std::uint32_t>((y + powers[z]) % n);
        if (x == y || x == z || y == z) continue;
        std::array<std::uint32_t, 3> e{x, y, z};
        std::ranges::sort(e);
        by_max[e[2]].emplace_back(e[0], e[1]);
      }
    }
    for (std::size_t m = 0; m < n; ++m) {
      auto& list = by_max[m];
      std::ranges::sort(list);
      list.erase(std::unique(list.begin(), list.end()), list.end());
      offsets_[m + 1] = offsets_[m] + list.size();
      pairs_.insert(pairs_.end(), list.begin(), list.end());
    }
  }

  bool creates_rainbow(const std::vector<Color>& colors, std::size_t m) const {
    const Color cm = colors[m];
    for (std::size_t i = offsets_[m]; i < offsets_[m + 1]; ++i) {
      const Color a = colors[pairs_[i].first];
      const Color b = colors[pairs_[i].second];
      if (a != b && a != cm && b != cm) return true;
    }
    return false;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_;
};

struct Prefix {
  std::vector<Color> colors;
  unsigned used = 0;
  u64 nodes_before = 0;  // prefix-pass nodes visited up to and including this one, in DFS order
};

enum class Mode { FirstWitness, All };

class SearchRun {
 public:
  SearchRun(u64 n, u64 k, unsigned r, Mode mode, const SearchOptions& options)
      : n_(n), r_(r), mode_(mode), budget_(options.node_budget), index_(n, k) {
    threads_ = resolve_threads(options.threads);
    split_depth_ = options.split_depth;
    if (split_depth_ == 0) split_depth_ = threads_ == 1 ? 1 : 8;
    split_depth_ = static_cast<unsigned>(std::min<u64>(split_depth_, n_));
  }

  void run() {
    std::vector<Color> colors(n_, 0);
    collect_prefixes(colors, 0, 0);
    const std::size_t count = prefixes_.size();
    subtree_nodes_.assign(count, 0);
    subtree_results_.resize(count);
    best_.store(SIZE_MAX);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      std::vector<Color> local(n_, 0);
      for (std::size_t i = next++; i < count; i = next++) {
        if (aborted_.load(std::memory_order_relaxed)) break;
        if (mode_ == Mode::FirstWitness && i > best_.load()) continue;
        const Prefix& p = prefixes_[i];
        std::copy(p.colors.begin(), p.colors.end(), local.begin());
        Worker w{*this, local, i};
        w.dfs(p.colors.size(), p.used);
        w.flush();
        subtree_nodes_[i] = w.subtree_nodes;
      }
    };
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads_, std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    }
  }

  bool exceeded() const { return aborted_.load(); }

  // Nodes a sequential DFS visits: everything, or everything up to the first witness.
  u64 nodes() const {
    const std::size_t b = best_.load();
    if (mode_ == Mode::All || b == SIZE_MAX) {
      u64 total = prefix_nodes_;
      for (u64 s : subtree_nodes_) total += s;
      return total;
    }
    u64 total = prefixes_[b].nodes_before;
    for (std::size_t i = 0; i <= b; ++i) total += subtree_nodes_[i];
    return total;
  }

  std::optional<Coloring> witness() const {
    const std::size_t b = best_.load();
    if (b == SIZE_MAX) return std::nullopt;
    return Coloring(subtree_results_[b].front(), r_);
  }

  std::vector<Coloring> all() const {
    std::vector<Coloring> out;
    for (const auto& list : subtree_results_) {
      for (const auto& colors : list) out.emplace_back(colors, r_);
    }
    return out;
  }

 private:
  // Single-threaded enumeration of the surviving canonical prefixes of length split_depth_.
  void collect_prefixes(std::vector<Color>& colors, std::size_t pos, unsigned used) {
    if (pos == split_depth_) {
      prefixes_.push_back({std::vector<Color>(colors.begin(), colors.begin() + pos), used, prefix_nodes_});
      return;
    }
    const unsigned limit = std::min(used, r_ - 1);
    for (unsigned c = 0; c <= limit; ++c) {
      const unsigned now_used = std::max(used, c + 1);
      if (n_ - pos - 1 < r_ - now_used) continue;
      ++prefix_nodes_;
      colors[pos] = static_cast<Color>(c);
      if (index_.creates_rainbow(colors, pos)) continue;
      collect_prefixes(colors, pos + 1, now_used);
    }
  }

  struct Worker {
    SearchRun& run;
    std::vector<Color>& colors;
    std::size_t subtree;
    u64 subtree_nodes = 0;
    u64 pending = 0;
    bool stop = false;

    void flush() {
      if (pending == 0) return;
      const u64 total = run.global_nodes_.fetch_add(pending) + pending;
      pending = 0;
      if (total > run.budget_) run.aborted_.store(true);
    }

    bool should_stop() {
      if (pending >= 4096) flush();
      if (run.aborted_.load(std::memory_order_relaxed)) return true;
      return run.mode_ == Mode::FirstWitness && run.best_.load(std::memory_order_relaxed) < subtree;
    }

    void dfs(std::size_t pos, unsigned used) {
      if (pos == run.n_) {
        if (used == run.r_) found();
        return;
      }
      const unsigned limit = std::min(used, run.r_ - 1);
      for (unsigned c = 0; c <= limit && !stop; ++c) {
        const unsigned now_used = std::max(used, c + 1);
        if (run.n_ - pos - 1 < run.r_ - now_used) continue;
        ++subtree_nodes;
        ++pending;
        if (should_stop()) {
          stop = true;
          return;
        }
        colors[pos] = static_cast<Color>(c);
        if (run.index_.creates_rainbow(colors, pos)) continue;
        dfs(pos + 1, now_used);
      }
    }

    void found() {
      run.subtree_results_[subtree].push_back(colors);
      if (run.mode_ == Mode::FirstWitness) {
        std::size_t cur = run.best_.load();
        while (subtree < cur && !run.best_.compare_exchange_weak(cur, subtree)) {
        }
        stop = true;
      }
    }
  };

  u64 n_;
  unsigned r_;
  Mode mode_;
  u64 budget_;
  unsigned threads_ = 1;
  unsigned split_depth_ = 1;
  SolutionIndex index_;
  std::vector<Prefix> prefixes_;
  u64 prefix_nodes_ = 0;
  std::vector<u64> subtree_nodes_;
  std::vector<std::vector<std::vector<Color>>> subtree_results_;
  std::atomic<std::size_t> best_{SIZE_MAX};
  std::atomic<u64> global_nodes_{0};
  std::atomic<bool> aborted_{false};
};

void check_search_input(u64 n, u64 k, unsigned r) {
  if (n < 3 || n > kMaxSearchModulus) throw DomainError("search: n must lie in [3, 4096], got " + std::to_string(n));
  if (k < 2) throw DomainError("search: k must be >= 2");
  if (r < 3 || r > kMaxColors) throw DomainError("search: r must lie in [3, 16], got " + std::to_string(r));
}

}  // namespace

RbResult rb_bruteforce(u64 n, u64 k, unsigned max_r, const SearchOptions& options) {
  check_search_input(n, k, std::max(max_r, 3u));
  if (max_r < 3) throw DomainError("rb_bruteforce: max_r must be >= 3");
  RbResult result;
  result.n = n;
  result.k = k;
  result.max_r = max_r;
  result.predicted = rb_predicted(n, k);
  for (unsigned r = 3; r <= max_r; ++r) {
    SearchRun run(n, k, r, Mode::FirstWitness, options);
    run.run();
    RoundEvidence ev{r, Verdict::Exhausted, std::nullopt, run.nodes()};
    // A witness stays valid even when the budget ran out elsewhere.
    if (auto w = run.witness()) {
      ev.verdict = Verdict::RainbowFreeWitness;
      ev.witness = std::move(w);
      result.evidence.push_back(std::move(ev));
      continue;
    }
    if (run.exceeded()) {
      ev.verdict = Verdict::BudgetExceeded;
      result.evidence.push_back(std::move(ev));
      break;
    }
    result.evidence.push_back(std::move(ev));
    result.rb = r;
    break;
  }
  return result;
}

std::optional<unsigned> rb_predicted(u64 p, u64 k) {
  if (p < 3 || k < 2 || !is_prime(p)) return std::nullopt;
  if (k % 2 == 1 && k <= 3) return std::nullopt;
  return support_condition(p, k) ? 3u : 4u;
}

Enumeration enumerate_rainbow_free(u64 n, u64 k, unsigned r, const SearchOptions& options) {
  check_search_input(n, k, r);
  SearchRun run(n, k, r, Mode::All, options);
  run.run();
  if (run.exceeded()) {
    throw BudgetExceeded("enumeration of Z_" + std::to_string(n) + " exceeded the node budget of " +
                         std::to_string(options.node_budget));
  }
  return {run.all(), run.nodes(), r};
}

std::vector<Coloring> enumerate_rainbow_free_3colorings(u64 n, u64 k, const SearchOptions& options) {
  return enumerate_rainbow_free(n, k, 3, options).colorings;
}

}  // namespace rainbowlab

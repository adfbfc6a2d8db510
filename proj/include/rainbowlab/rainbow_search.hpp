#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "rainbowlab/coloring.hpp"

namespace rainbowlab {

inline constexpr u64 kMaxSearchModulus = 4096;

struct SearchOptions {
  u64 node_budget = 1'000'000'000;
  unsigned threads = 0;      // 0: RAINBOWLAB_THREADS, else hardware concurrency
  unsigned split_depth = 0;  // 0: chosen from the thread count
};

// Worker count after applying the RAINBOWLAB_THREADS override.
unsigned resolve_threads(unsigned requested);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Verdict { RainbowFreeWitness, Exhausted, BudgetExceeded };

const char* to_string(Verdict v);

struct RoundEvidence {
  unsigned r = 0;
  Verdict verdict = Verdict::Exhausted;
  std::optional<Coloring> witness;  // canonical, set for RainbowFreeWitness
  u64 nodes = 0;
};

struct RbResult {
  u64 n = 0;
  u64 k = 0;
  unsigned max_r = 0;
  std::optional<unsigned> rb;
  std::vector<RoundEvidence> evidence;
  std::optional<unsigned> predicted;  // absent outside theorem scope

  bool budget_exceeded() const;
  u64 nodes_explored() const;
  // Witness of the largest r that has one (the r = rb - 1 coloring when rb is known).
  const Coloring* last_witness() const;
};

// rb(Z_n, x - y = z^k) by canonical-form DFS for r = 3..max_r.
RbResult rb_bruteforce(u64 n, u64 k, unsigned max_r = 4, const SearchOptions& options = {});

// Closed-form value (3 or 4) for an odd prime p with even k or odd k > 3.
std::optional<unsigned> rb_predicted(u64 p, u64 k);

struct Enumeration {
  std::vector<Coloring> colorings;  // canonical, lexicographic
  u64 nodes = 0;
  unsigned r = 0;
  u64 labeled_count() const;  // colorings.size() * r!
};

// All canonical rainbow-free exact r-colorings of Z_n. Throws BudgetExceeded.
Enumeration enumerate_rainbow_free(u64 n, u64 k, unsigned r = 3, const SearchOptions& options = {});

std::vector<Coloring> enumerate_rainbow_free_3colorings(u64 n, u64 k, const SearchOptions& options = {});

}  // namespace rainbowlab

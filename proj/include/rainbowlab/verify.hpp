#pragma once

#include <string>
#include <vector>

#include "rainbowlab/rainbow_search.hpp"

namespace rainbowlab {

struct VerifyConfig {
  u64 p_max = 100;  // digraph sweeps run over odd primes up to this
  u64 k_max = 12;
  std::vector<u64> class_primes{5, 7, 11, 13};
  std::vector<u64> class_ks{2, 3, 4, 5};
  std::size_t lift_length = 500;
  std::size_t density_trials = 1000;
  u64 seed = 0;
  bool self_test_negative = false;  // corrupt one enumerated coloring on purpose
  SearchOptions search;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  u64 cases = 0;
  u64 failures = 0;
  std::string detail;  // first failure, if any
};

std::vector<CheckResult> verify_all(const VerifyConfig& config);

}  // namespace rainbowlab

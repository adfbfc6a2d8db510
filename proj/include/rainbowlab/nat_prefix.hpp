#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "rainbowlab/coloring.hpp"

namespace rainbowlab {

using Rational = boost::rational<i64>;

// Coloring of the prefix [1..N] of the naturals; positions are 1-based.
class PrefixColoring {
 public:
  PrefixColoring(std::vector<Color> colors_from_one, unsigned r = 3);

  std::size_t length() const { return colors_.size(); }
  unsigned r() const { return r_; }
  Color operator()(std::size_t i) const { return colors_[i - 1]; }
  const std::vector<Color>& colors() const { return colors_; }

 private:
  std::vector<Color> colors_;
  unsigned r_;
};

// Periodic extension i -> zc(i mod n) over [1..N].
PrefixColoring lift(const Coloring& zc, std::size_t N);

struct PrefixTriple {
  u64 x = 0;
  u64 y = 0;
  u64 z = 0;
  friend bool operator==(const PrefixTriple&, const PrefixTriple&) = default;
};

// Least z, then least y, with x = y + z^k <= N and three distinct colors.
std::optional<PrefixTriple> find_rainbow_prefix(const PrefixColoring& c, u64 k);

// Colors present in every bichromatic run; all present colors when no such run exists.
std::vector<Color> dominant_colors(const PrefixColoring& c);

struct Run {
  std::size_t position = 0;
  std::size_t length = 0;
  Color color = 0;
  friend bool operator==(const Run&, const Run&) = default;
};

std::vector<Run> string_decomposition(const PrefixColoring& c);

struct ShiftViolation {
  std::size_t run_position = 0;
  u64 j = 0;
  int direction = +1;  // +1 for i + j^k, -1 for i - j^k
  friend bool operator==(const ShiftViolation&, const ShiftViolation&) = default;
};

// Each maximal run of one nondominant color, shifted by +-j^k for any j of the
// other nondominant color, must land (when inside [1..N]) on a monochromatic
// nondominant window. Lists the shifts that do not.
std::vector<ShiftViolation> string_shift_check(const PrefixColoring& c, u64 k, Color dominant);

struct SmallGap {
  u64 j = 0;
  u64 d = 0;
  friend bool operator==(const SmallGap&, const SmallGap&) = default;
};

// First j > search_from in the ascending class with j + d also in it, d <= n0 - 1.
std::optional<SmallGap> small_gap(const std::vector<u64>& class_positions, u64 n0, u64 search_from);

std::vector<u64> class_positions(const PrefixColoring& c, Color color);

// Lexicographically least coprime pair (j1 < j2) inside one color class.
std::optional<std::pair<u64, u64>> coprime_pair_in_class(const PrefixColoring& c, Color color);

// (4^s - 1) / (3 * 4^s) with s = floor(k / 2).
Rational density_threshold(u64 k);

struct DensityProfile {
  std::vector<std::vector<u64>> per_color_counts;  // [n - 1][color] = |[n] ∩ class|
  std::vector<Rational> final_densities;
  Rational min_final_density;
  Rational threshold;
};

DensityProfile density_profile(const PrefixColoring& c, u64 k);

// Every class has final density strictly above threshold(k) + margin.
bool exceeds_density_target(const PrefixColoring& c, u64 k, double margin);

// CSV trace "n,count_R,count_G,count_B" (colors 0, 1, 2).
std::string density_trace_csv(const DensityProfile& profile);

// Longest run a, a + d, a + 2d, ... of one color inside the prefix. Exploration
// only; says nothing about infinite progressions.
struct ProgressionScan {
  u64 start = 0;
  u64 length = 0;
};
ProgressionScan longest_monochromatic_progression(const PrefixColoring& c, Color color, u64 difference);

struct DensityExperimentConfig {
  u64 k = 2;
  std::size_t N = 200;
  std::size_t trials = 1000;
  u64 seed = 0;
  double margin = 0.02;
  unsigned threads = 0;
};

struct DensityExperimentReport {
  DensityExperimentConfig config;
  Rational threshold;
  std::size_t min_class_count = 0;  // every generated class has at least this many elements
  bool generator_feasible = true;
  std::string generator_note;
  std::size_t with_rainbow = 0;
  std::size_t without_rainbow = 0;
  std::vector<std::size_t> exceptions;  // trial indices with no rainbow
};

// Seeded random exact 3-colorings of [1..N] whose every class density exceeds
// threshold + margin, each scanned for a rainbow. A finite-scale heuristic.
DensityExperimentReport density_experiment(const DensityExperimentConfig& config);

// The coloring generated for one trial, for reproduction.
std::optional<PrefixColoring> density_trial_coloring(const DensityExperimentConfig& config, std::size_t trial);

}  // namespace rainbowlab

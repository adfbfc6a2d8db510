#include "rainbowlab/nat_prefix.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "rainbowlab/rainbow_search.hpp"

namespace rainbowlab {

namespace {

// z^k, or limit + 1 once it exceeds limit.
u64 power_capped(u64 z, u64 k, u64 limit) {
  u64 result = 1;
  for (u64 i = 0; i < k; ++i) {
    if (z != 0 && result > limit / z) return limit + 1;
    result *= z;
  }
  return result;
}

// Last position of the maximal run containing each position (1-based, index 0 unused).
std::vector<std::size_t> run_ends(const PrefixColoring& c) {
  const std::size_t N = c.length();
  std::vector<std::size_t> end(N + 1, 0);
  for (std::size_t i = N; i >= 1; --i) end[i] = (i < N && c(i + 1) == c(i)) ? end[i + 1] : i;
  return end;
}

u64 splitmix64(u64 x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double density_target(u64 k, double margin) {
  const Rational t = density_threshold(k);
  return static_cast<double>(t.numerator()) / static_cast<double>(t.denominator()) + margin;
}

// Smallest count m with m / N > target, using the same comparison as exceeds_density_target.
std::size_t min_class_count(const DensityExperimentConfig& cfg) {
  if (cfg.N == 0) return 1;
  const double target = density_target(cfg.k, cfg.margin);
  const double N = static_cast<double>(cfg.N);
  auto above = [&](std::size_t m) { return static_cast<double>(m) / N > target; };
  std::size_t m = static_cast<std::size_t>(std::max(0.0, target * N));
  while (m > 0 && above(m - 1)) --m;
  while (!above(m)) ++m;
  return m;
}

}  // namespace

PrefixColoring::PrefixColoring(std::vector<Color> colors_from_one, unsigned r)
    : colors_(std::move(colors_from_one)), r_(r) {
  if (colors_.empty()) throw DomainError("prefix coloring: length must be >= 1");
  if (r == 0 || r > kMaxColors) throw DomainError("prefix coloring: r must lie in [1, 16]");
  for (Color c : colors_) {
    if (c >= r) throw DomainError("prefix coloring: color id out of range");
  }
}

PrefixColoring lift(const Coloring& zc, std::size_t N) {
  if (N < 1) throw DomainError("lift: N must be >= 1");
  if (zc.size() == 0) throw DomainError("lift: empty coloring");
  std::vector<Color> colors(N);
  for (std::size_t i = 1; i <= N; ++i) colors[i - 1] = zc[i % zc.size()];
  return PrefixColoring(std::move(colors), zc.r());
}

std::optional<PrefixTriple> find_rainbow_prefix(const PrefixColoring& c, u64 k) {
  const u64 N = c.length();
  for (u64 z = 1; z <= N; ++z) {
    const u64 zk = power_capped(z, k, N);
    if (zk >= N) break;
    const Color cz = c(z);
    for (u64 y = 1; y + zk <= N; ++y) {
      const Color cy = c(y);
      const Color cx = c(y + zk);
      if (cx != cy && cy != cz && cx != cz) return PrefixTriple{y + zk, y, z};
    }
  }
  return std::nullopt;
}

std::vector<Color> dominant_colors(const PrefixColoring& c) {
  // Every bichromatic run contains an adjacent unequal pair, and every such
  // pair is itself a bichromatic run.
  std::uint32_t present = 0;
  std::uint32_t common = ~std::uint32_t{0};
  bool any_pair = false;
  for (std::size_t i = 1; i <= c.length(); ++i) {
    present |= std::uint32_t{1} << c(i);
    if (i < c.length() && c(i) != c(i + 1)) {
      any_pair = true;
      common &= (std::uint32_t{1} << c(i)) | (std::uint32_t{1} << c(i + 1));
    }
  }
  const std::uint32_t mask = any_pair ? common : present;
  std::vector<Color> out;
  for (unsigned col = 0; col < c.r(); ++col) {
    if (mask & (std::uint32_t{1} << col)) out.push_back(static_cast<Color>(col));
  }
  return out;
}

std::vector<Run> string_decomposition(const PrefixColoring& c) {
  std::vector<Run> runs;
  for (std::size_t i = 1; i <= c.length(); ++i) {
    if (!runs.empty() && runs.back().color == c(i)) {
      ++runs.back().length;
    } else {
      runs.push_back({i, 1, c(i)});
    }
  }
  return runs;
}

std::vector<ShiftViolation> string_shift_check(const PrefixColoring& c, u64 k, Color dominant) {
  const u64 N = c.length();
  const auto runs = string_decomposition(c);
  const auto end = run_ends(c);
  std::vector<ShiftViolation> out;
  auto window_ok = [&](u64 start, u64 len, Color a, Color b) {
    const Color w = c(start);
    return (w == a || w == b) && end[start] >= start + len - 1;
  };
  for (u64 j = 1; j <= N; ++j) {
    const Color cj = c(j);
    if (cj == dominant) continue;
    const u64 jk = power_capped(j, k, N);
    if (jk >= N) break;
    for (const Run& run : runs) {
      if (run.color == dominant || run.color == cj) continue;
      const u64 i = run.position;
      const u64 len = run.length;
      if (i + jk + len - 1 <= N && !window_ok(i + jk, len, cj, run.color)) {
        out.push_back({i, j, +1});
      }
      if (i > jk && !window_ok(i - jk, len, cj, run.color)) {
        out.push_back({i, j, -1});
      }
    }
  }
  return out;
}

std::optional<SmallGap> small_gap(const std::vector<u64>& positions, u64 n0, u64 search_from) {
  if (n0 < 2) throw DomainError("small_gap: n0 must be >= 2");
  for (std::size_t a = 0; a < positions.size(); ++a) {
    const u64 j = positions[a];
    if (j <= search_from) continue;
    if (a + 1 < positions.size() && positions[a + 1] - j <= n0 - 1) return SmallGap{j, positions[a + 1] - j};
  }
  return std::nullopt;
}

std::vector<u64> class_positions(const PrefixColoring& c, Color color) {
  std::vector<u64> out;
  for (std::size_t i = 1; i <= c.length(); ++i) {
    if (c(i) == color) out.push_back(i);
  }
  return out;
}

std::optional<std::pair<u64, u64>> coprime_pair_in_class(const PrefixColoring& c, Color color) {
  const auto cls = class_positions(c, color);
  for (std::size_t a = 0; a < cls.size(); ++a) {
    for (std::size_t b = a + 1; b < cls.size(); ++b) {
      if (gcd(cls[a], cls[b]) == 1) return std::pair{cls[a], cls[b]};
    }
  }
  return std::nullopt;
}

Rational density_threshold(u64 k) {
  if (k < 2 || k > 61) throw DomainError("density_threshold: k must lie in [2, 61]");
  const i64 four_s = i64{1} << (2 * (k / 2));
  return Rational(four_s - 1, 3 * four_s);
}

DensityProfile density_profile(const PrefixColoring& c, u64 k) {
  DensityProfile prof;
  prof.threshold = density_threshold(k);
  std::vector<u64> counts(c.r(), 0);
  prof.per_color_counts.reserve(c.length());
  for (std::size_t i = 1; i <= c.length(); ++i) {
    ++counts[c(i)];
    prof.per_color_counts.push_back(counts);
  }
  const i64 N = static_cast<i64>(c.length());
  for (u64 count : counts) prof.final_densities.emplace_back(static_cast<i64>(count), N);
  prof.min_final_density = *std::min_element(prof.final_densities.begin(), prof.final_densities.end());
  return prof;
}

bool exceeds_density_target(const PrefixColoring& c, u64 k, double margin) {
  const double target = density_target(k, margin);
  const auto prof = density_profile(c, k);
  return std::ranges::all_of(prof.final_densities, [&](const Rational& d) {
    return static_cast<double>(d.numerator()) / static_cast<double>(d.denominator()) > target;
  });
}

std::string density_trace_csv(const DensityProfile& profile) {
  static constexpr const char* kNames[] = {"R", "G", "B"};
  std::ostringstream out;
  const std::size_t r = profile.final_densities.size();
  out << "n";
  for (std::size_t col = 0; col < r; ++col) {
    out << ",count_" << (col < 3 ? std::string(kNames[col]) : std::to_string(col));
  }
  out << "\n";
  for (std::size_t i = 0; i < profile.per_color_counts.size(); ++i) {
    out << i + 1;
    for (u64 count : profile.per_color_counts[i]) out << "," << count;
    out << "\n";
  }
  return out.str();
}

ProgressionScan longest_monochromatic_progression(const PrefixColoring& c, Color color, u64 difference) {
  if (difference == 0) throw DomainError("progression scan: difference must be positive");
  const u64 N = c.length();
  ProgressionScan best;
  for (u64 start = 1; start <= std::min(N, difference); ++start) {
    u64 run_start = 0;
    u64 len = 0;
    for (u64 i = start; i <= N; i += difference) {
      if (c(i) == color) {
        if (len == 0) run_start = i;
        if (++len > best.length) best = {run_start, len};
      } else {
        len = 0;
      }
    }
  }
  return best;
}

std::optional<PrefixColoring> density_trial_coloring(const DensityExperimentConfig& cfg, std::size_t trial) {
  const std::size_t min_count = min_class_count(cfg);
  if (cfg.N == 0 || 3 * min_count > cfg.N) return std::nullopt;
  std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(trial)));
  // Class sizes: a uniform composition of the slack on top of min_count each.
  const std::size_t slack = cfg.N - 3 * min_count;
  std::uniform_int_distribution<std::size_t> cut(0, slack);
  std::size_t a = cut(rng);
  std::size_t b = cut(rng);
  if (a > b) std::swap(a, b);
  const std::size_t sizes[3] = {min_count + a, min_count + (b - a), min_count + (slack - b)};
  std::vector<Color> colors;
  colors.reserve(cfg.N);
  for (Color col = 0; col < 3; ++col) colors.insert(colors.end(), sizes[col], col);
  std::shuffle(colors.begin(), colors.end(), rng);
  return PrefixColoring(std::move(colors), 3);
}

DensityExperimentReport density_experiment(const DensityExperimentConfig& cfg) {
  DensityExperimentReport rep;
  rep.config = cfg;
  rep.threshold = density_threshold(cfg.k);
  rep.min_class_count = min_class_count(cfg);
  if (cfg.trials == 0) return rep;
  if (cfg.N == 0 || 3 * rep.min_class_count > cfg.N) {
    rep.generator_feasible = false;
    rep.generator_note = "cannot give every class more than " + std::to_string(rep.min_class_count - 1) +
                         " of " + std::to_string(cfg.N) + " positions";
    return rep;
  }

  std::vector<std::uint8_t> has_rainbow(cfg.trials, 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < cfg.trials; t = next++) {
      const auto c = density_trial_coloring(cfg, t);
      has_rainbow[t] = find_rainbow_prefix(*c, cfg.k).has_value();
    }
  };
  const unsigned threads = std::min<std::size_t>(resolve_threads(cfg.threads), cfg.trials);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    if (has_rainbow[t]) {
      ++rep.with_rainbow;
    } else {
      ++rep.without_rainbow;
      rep.exceptions.push_back(t);
    }
  }
  return rep;
}

}  // namespace rainbowlab

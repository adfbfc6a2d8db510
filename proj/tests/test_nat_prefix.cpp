#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "rainbowlab/nat_prefix.hpp"
#include "rainbowlab/rainbow_search.hpp"

using namespace rainbowlab;

namespace {

constexpr Color R = 0, B = 1, G = 2;

PrefixColoring prefix(std::vector<Color> colors) { return PrefixColoring(std::move(colors), 3); }

Coloring z11_free() { return Coloring({0, 1, 2, 2, 2, 2, 2, 2, 2, 2, 1}, 3); }
Coloring z7_free() { return Coloring({0, 1, 2, 2, 2, 2, 1}, 3); }

std::optional<PrefixTriple> rainbow_oracle(const PrefixColoring& c, u64 k) {
  const u64 N = c.length();
  for (u64 z = 1; z <= N; ++z) {
    u64 zk = 1;
    for (u64 e = 0; e < k && zk <= N; ++e) zk *= z;
    if (zk >= N) break;
    for (u64 y = 1; y + zk <= N; ++y) {
      const u64 x = y + zk;
      if (c(x) != c(y) && c(y) != c(z) && c(x) != c(z)) return PrefixTriple{x, y, z};
    }
  }
  return std::nullopt;
}

std::vector<Color> dominant_oracle(const PrefixColoring& c) {
  const std::size_t N = c.length();
  std::vector<Color> present;
  for (Color col = 0; col < c.r(); ++col) {
    for (std::size_t i = 1; i <= N; ++i) {
      if (c(i) == col) {
        present.push_back(col);
        break;
      }
    }
  }
  std::vector<Color> out;
  bool any_bichromatic = false;
  for (Color col : present) {
    bool in_all = true;
    for (std::size_t lo = 1; lo <= N; ++lo) {
      std::set<Color> seen;
      for (std::size_t hi = lo; hi <= N; ++hi) {
        seen.insert(c(hi));
        if (seen.size() == 2) {
          any_bichromatic = true;
          if (!seen.contains(col)) in_all = false;
        }
      }
    }
    if (in_all) out.push_back(col);
  }
  return any_bichromatic ? out : present;
}

}  // namespace

TEST_CASE("find_rainbow_prefix examples") {
  const auto c = prefix({R, B, G, R, R, R, R, R, R, R});
  CHECK(find_rainbow_prefix(c, 2) == PrefixTriple{3, 2, 1});
  CHECK_FALSE(find_rainbow_prefix(prefix(std::vector<Color>(40, G)), 2).has_value());
  CHECK_FALSE(find_rainbow_prefix(lift(z11_free(), 100), 2).has_value());
}

TEST_CASE("find_rainbow_prefix agrees with a direct scan") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t N = 1 + trial % 60;
    const auto zc = oracle::random_coloring(rng, N, 3);
    const PrefixColoring c(std::vector<Color>(zc.colors().begin(), zc.colors().end()), 3);
    for (u64 k : {2, 3, 5}) REQUIRE(find_rainbow_prefix(c, k) == rainbow_oracle(c, k));
  }
}

TEST_CASE("lift examples") {
  const auto one = lift(z7_free(), 1);
  REQUIRE(one.length() == 1);
  CHECK(one(1) == z7_free()[1]);

  const auto c = lift(z11_free(), 33);
  for (std::size_t i = 1; i <= 33; ++i) CHECK(c(i) == z11_free()[i % 11]);
  CHECK_FALSE(find_rainbow_prefix(c, 2).has_value());

  const auto profile = density_profile(lift(z7_free(), 21), 2);
  CHECK(profile.min_final_density == Rational(1, 7));
}

TEST_CASE("lift soundness up to N = 500") {
  for (u64 p : {5, 7, 11, 13}) {
    for (u64 k : {2, 3, 4, 5}) {
      for (const auto& zc : enumerate_rainbow_free_3colorings(p, k)) {
        for (std::size_t N : {1u, 2u, 50u, 137u, 500u}) REQUIRE_FALSE(find_rainbow_prefix(lift(zc, N), k).has_value());
      }
    }
  }
}

TEST_CASE("dominant_colors examples") {
  CHECK(dominant_colors(prefix({R, B, R, G, R, B})) == std::vector<Color>{R});
  CHECK(dominant_colors(prefix({R, R, R})) == std::vector<Color>{R});
  CHECK(dominant_colors(prefix({B, G})) == std::vector<Color>{B, G});
}

TEST_CASE("dominant_colors agrees with a window scan") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t N = 1 + trial % 25;
    const auto zc = oracle::random_coloring(rng, N, 3);
    const PrefixColoring c(std::vector<Color>(zc.colors().begin(), zc.colors().end()), 3);
    REQUIRE(dominant_colors(c) == dominant_oracle(c));
  }
}

TEST_CASE("rainbow-free prefixes have c(1) dominant") {
  for (u64 p : {7, 11, 13}) {
    for (u64 k : {2, 4}) {
      for (const auto& zc : enumerate_rainbow_free_3colorings(p, k)) {
        const auto c = lift(zc, 200);
        const auto dom = dominant_colors(c);
        REQUIRE(std::find(dom.begin(), dom.end(), c(1)) != dom.end());
      }
    }
  }
}

TEST_CASE("string_decomposition examples") {
  CHECK(string_decomposition(prefix({R, R, B, G, G})) == std::vector<Run>{{1, 2, R}, {3, 1, B}, {4, 2, G}});
  CHECK(string_decomposition(prefix({R})) == std::vector<Run>{{1, 1, R}});

  const auto runs = string_decomposition(lift(z11_free(), 22));
  std::size_t covered = 0;
  for (const auto& run : runs) covered += run.length;
  CHECK(covered == 22);
  // Runs starting in the first period reappear 11 positions later.
  for (const auto& run : runs) {
    if (run.position + 11 + run.length <= 22 && run.position > 1) {
      const Run shifted{run.position + 11, run.length, run.color};
      CHECK(std::find(runs.begin(), runs.end(), shifted) != runs.end());
    }
  }
}

TEST_CASE("string_shift_check") {
  for (u64 p : {7, 11, 13}) {
    for (u64 k : {2, 3, 4, 5}) {
      for (const auto& zc : enumerate_rainbow_free_3colorings(p, k)) {
        const auto c = lift(zc, 200);
        for (Color d : dominant_colors(c)) REQUIRE(string_shift_check(c, k, d).empty());
      }
    }
  }
  const auto rainbow = prefix({R, B, G, R, R, R, R, R, R, R});
  CHECK_FALSE(string_shift_check(rainbow, 2, R).empty());
  CHECK(string_shift_check(prefix({R, B, R, B, B, R, R, B}), 2, R).empty());
}

TEST_CASE("small_gap examples") {
  CHECK(small_gap({1, 3, 5, 9, 10}, 4, 0) == SmallGap{1, 2});
  CHECK_FALSE(small_gap({5, 105, 205}, 4, 0).has_value());
  CHECK(small_gap({7, 8}, 2, 0) == SmallGap{7, 1});
  CHECK(small_gap({1, 3, 5, 9, 10}, 4, 5) == SmallGap{9, 1});
  CHECK_THROWS_AS(small_gap({1, 2}, 1, 0), DomainError);
}

TEST_CASE("coprime pairs") {
  auto with = [](std::initializer_list<std::size_t> members, std::size_t N) {
    std::vector<Color> colors(N, R);
    for (auto m : members) colors[m - 1] = B;
    return prefix(colors);
  };
  CHECK(coprime_pair_in_class(with({4, 9}, 12), B) == std::pair<u64, u64>{4, 9});
  std::vector<Color> evens(50, R);
  for (std::size_t i = 2; i <= 50; i += 2) evens[i - 1] = B;
  CHECK_FALSE(coprime_pair_in_class(prefix(evens), B).has_value());
  CHECK_FALSE(coprime_pair_in_class(with({6, 10, 15}, 20), B).has_value());
  CHECK(class_positions(with({6, 10, 15}, 20), B) == std::vector<u64>{6, 10, 15});
}

TEST_CASE("density thresholds") {
  CHECK(density_threshold(2) == Rational(1, 4));
  CHECK(density_threshold(3) == Rational(1, 4));
  CHECK(density_threshold(4) == Rational(5, 16));
  CHECK(density_threshold(5) == Rational(5, 16));
  for (u64 k = 2; k <= 12; ++k) {
    const i64 four_s = i64{1} << (2 * (k / 2));
    CHECK(density_threshold(k) == Rational(four_s - 1, 3 * four_s));
  }
  CHECK_THROWS_AS(density_threshold(1), DomainError);
}

TEST_CASE("density profile counts") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t N = 1 + trial * 7;
    const auto zc = oracle::random_coloring(rng, N, 3);
    const PrefixColoring c(std::vector<Color>(zc.colors().begin(), zc.colors().end()), 3);
    const auto prof = density_profile(c, 2);
    REQUIRE(prof.per_color_counts.size() == N);
    for (std::size_t n = 1; n <= N; ++n) {
      const auto& row = prof.per_color_counts[n - 1];
      REQUIRE(std::accumulate(row.begin(), row.end(), u64{0}) == n);
    }
  }
  const auto mono = density_profile(prefix({G, G, G, G}), 2);
  CHECK(mono.min_final_density == Rational(0));
  CHECK(mono.final_densities[G] == Rational(1));
  CHECK(mono.threshold == Rational(1, 4));

  const auto csv = density_trace_csv(density_profile(prefix({R, B, G}), 2));
  CHECK(csv == "n,count_R,count_G,count_B\n1,1,0,0\n2,1,1,0\n3,1,1,1\n");
}

TEST_CASE("progression scan") {
  const auto c = lift(z11_free(), 110);
  const auto scan = longest_monochromatic_progression(c, 0, 11);
  CHECK(scan.start == 11);
  CHECK(scan.length == 10);
  CHECK_THROWS_AS(longest_monochromatic_progression(c, 0, 0), DomainError);
}

TEST_CASE("density experiment") {
  DensityExperimentConfig cfg;
  cfg.trials = 0;
  auto rep = density_experiment(cfg);
  CHECK(rep.with_rainbow == 0);
  CHECK(rep.without_rainbow == 0);
  CHECK(rep.exceptions.empty());

  cfg.trials = 200;
  cfg.seed = 42;
  rep = density_experiment(cfg);
  CHECK(rep.generator_feasible);
  CHECK(rep.with_rainbow == 200);
  CHECK(rep.exceptions.empty());

  for (std::size_t t : {0u, 17u, 199u}) {
    const auto c = density_trial_coloring(cfg, t);
    REQUIRE(c.has_value());
    CHECK(c->length() == 200);
    CHECK(exceeds_density_target(*c, 2, cfg.margin));
  }

  // Same seed, different thread counts: identical trial colorings and report.
  cfg.threads = 1;
  const auto single = density_experiment(cfg);
  cfg.threads = 4;
  const auto multi = density_experiment(cfg);
  CHECK(single.with_rainbow == multi.with_rainbow);
  CHECK(single.exceptions == multi.exceptions);

  // The rainbow-free Z_11 lift is excluded by the density target.
  CHECK_FALSE(exceeds_density_target(lift(z11_free(), 200), 2, 0.02));
}

TEST_CASE("density experiment reports an infeasible target") {
  DensityExperimentConfig cfg;
  cfg.k = 2;
  cfg.N = 200;
  cfg.trials = 5;
  cfg.margin = 0.1;  // 3 * (1/4 + 0.1) > 1
  const auto rep = density_experiment(cfg);
  CHECK_FALSE(rep.generator_feasible);
  CHECK_FALSE(rep.generator_note.empty());
  CHECK(rep.with_rainbow + rep.without_rainbow == 0);
}

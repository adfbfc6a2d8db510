#include "rainbowlab/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rainbowlab/classifier.hpp"
#include "rainbowlab/nat_prefix.hpp"
#include "rainbowlab/power_digraph.hpp"

namespace rainbowlab {

namespace {

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++result_.cases;
    if (ok) return;
    ++result_.failures;
    result_.passed = false;
    if (result_.detail.empty()) result_.detail = what;
  }

  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::vector<u64> odd_primes_up_to(u64 limit) {
  std::vector<u64> out;
  for (u64 p = 3; p <= limit; p += 2) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

std::string pk(u64 p, u64 k) { return "p=" + std::to_string(p) + " k=" + std::to_string(k); }

// Cycle membership straight from the definition: f^j(a) = a for some 1 <= j <= n.
bool on_cycle_by_iteration(const PowerDigraph& g, Vertex a) {
  Vertex v = a;
  for (u64 j = 0; j < g.n(); ++j) {
    v = g.successor(v);
    if (v == a) return true;
  }
  return false;
}

CheckResult cycle_vertex_sweep(const VerifyConfig& cfg) {
  Check check("cycle_vertex_theorem");
  for (u64 p : odd_primes_up_to(cfg.p_max)) {
    for (u64 k = 2; k <= cfg.k_max; ++k) {
      const auto g = PowerDigraph::build(p, k);
      const u64 t = t_decomposition(p - 1, k).t;
      check.expect(cycle_vertices(g).size() == t + 1, pk(p, k) + ": cycle vertex count != t+1");
      for (Vertex a = 0; a < p; ++a) {
        const bool predicted = a == 0 || t % multiplicative_order(a, p) == 0;
        if (predicted != on_cycle_by_iteration(g, a) || predicted != g.is_cycle_vertex(a)) {
          check.expect(false, pk(p, k) + ": vertex " + std::to_string(a) + " disagrees with ord_p(a) | t");
        }
      }
    }
  }
  return check.done();
}

CheckResult component_sweep(const VerifyConfig& cfg) {
  Check check("component_propositions");
  for (u64 p : odd_primes_up_to(cfg.p_max)) {
    for (u64 k = 2; k <= cfg.k_max; ++k) {
      if (k % 2 == 1 && k <= 3) continue;
      const auto g = PowerDigraph::build(p, k);
      const std::size_t expected = k % 2 == 0 ? 2 : 3;
      check.expect((g.component_count() == expected) == support_condition(p, k),
                   pk(p, k) + ": component count " + std::to_string(g.component_count()) +
                       " vs support condition");
      // Each component holds exactly one cycle.
      std::vector<int> cycles(g.component_count(), 0);
      std::vector<bool> seen(p, false);
      for (Vertex a = 0; a < p; ++a) {
        if (!g.is_cycle_vertex(a) || seen[a]) continue;
        ++cycles[g.component_of(a)];
        for (Vertex v = a; !seen[v]; v = g.successor(v)) seen[v] = true;
      }
      check.expect(std::ranges::all_of(cycles, [](int c) { return c == 1; }), pk(p, k) + ": component without exactly one cycle");
    }
  }
  return check.done();
}

struct ClassData {
  u64 p;
  u64 k;
  std::vector<Coloring> rainbow_free;
};

std::vector<Coloring> all_canonical_exact_3colorings(u64 n) {
  std::vector<Coloring> out;
  std::vector<Color> colors(n, 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned used) -> void {
    if (pos == n) {
      if (used == 3) out.emplace_back(colors, 3);
      return;
    }
    for (unsigned c = 0; c <= std::min(used, 2u); ++c) {
      colors[pos] = static_cast<Color>(c);
      self(self, pos + 1, std::max(used, c + 1));
    }
  };
  rec(rec, 0, 0);
  return out;
}

CheckResult classification(const VerifyConfig& cfg, std::vector<ClassData>& data) {
  Check check("classification_set_equality");
  bool corrupted = false;
  for (u64 p : cfg.class_primes) {
    for (u64 k : cfg.class_ks) {
      auto enumerated = enumerate_rainbow_free_3colorings(p, k, cfg.search);
      if (cfg.self_test_negative && !corrupted && !enumerated.empty()) {
        auto colors = std::vector<Color>(enumerated.front().colors().begin(), enumerated.front().colors().end());
        colors[1] = colors[1] == 1 ? 2 : 1;
        enumerated.front() = canonicalize(Coloring(std::move(colors), 3));
        corrupted = true;
      }
      const auto g = PowerDigraph::build(p, k);
      std::vector<Coloring> structural;
      for (const auto& c : all_canonical_exact_3colorings(p)) {
        if (structural_check(c, g).overall) structural.push_back(c);
      }
      const auto generated = generate_rainbow_free(p, k);
      std::vector<Coloring> sorted = enumerated;
      std::ranges::sort(sorted);
      check.expect(sorted == structural, pk(p, k) + ": enumeration differs from structural_check set");
      check.expect(sorted == generated, pk(p, k) + ": enumeration differs from generate_rainbow_free");
      data.push_back({p, k, std::move(sorted)});
    }
  }
  return check.done();
}

CheckResult min_class_bounds(const VerifyConfig& cfg, const std::vector<ClassData>& data) {
  Check check("min_class_bounds");
  for (const auto& d : data) {
    for (const auto& c : d.rainbow_free) {
      check.expect(c.min_class_size() == 1, pk(d.p, d.k) + ": min class size != 1");
    }
  }
  for (u64 n : {9u, 15u}) {
    const u64 bound = n / smallest_prime_factor(n);
    for (const auto& c : enumerate_rainbow_free_3colorings(n, 2, cfg.search)) {
      check.expect(c.min_class_size() <= bound, "n=" + std::to_string(n) + ": min class size above n/r1");
    }
  }
  return check.done();
}

CheckResult frobenius_oracle() {
  Check check("frobenius_oracle");
  for (u64 i = 1; i <= 50; ++i) {
    for (u64 j = 1; j <= 50; ++j) {
      const u64 limit = i * j + i + j;
      std::vector<bool> rep(limit + 1, false);
      rep[0] = true;
      for (u64 s = 1; s <= limit; ++s) rep[s] = (s >= i && rep[s - i]) || (s >= j && rep[s - j]);
      const u64 g = gcd(i, j);
      i64 largest_gap = -static_cast<i64>(g);
      for (u64 s = 0; s <= limit; s += g) {
        if (!rep[s]) largest_gap = static_cast<i64>(s);
      }
      check.expect(frobenius_bound(i, j) == largest_gap,
                   "i=" + std::to_string(i) + " j=" + std::to_string(j) + ": closed form disagrees with sieve");
    }
  }
  return check.done();
}

CheckResult lift_soundness(const VerifyConfig& cfg, const std::vector<ClassData>& data) {
  Check check("lift_soundness");
  for (const auto& d : data) {
    for (const auto& c : d.rainbow_free) {
      check.expect(!find_rainbow_prefix(lift(c, cfg.lift_length), d.k), pk(d.p, d.k) + ": lifted coloring has a rainbow");
    }
  }
  return check.done();
}

CheckResult structural_lemmas(const std::vector<ClassData>& data) {
  Check check("structural_lemmas");
  for (const auto& d : data) {
    for (const auto& c : d.rainbow_free) {
      for (u64 a = 1; a < d.p; ++a) {
        check.expect(c[a] == c[d.p - a], pk(d.p, d.k) + ": c(a) != c(-a)");
        check.expect(check_ak_dominance(c, a, d.k), pk(d.p, d.k) + ": a^k-dominance fails at a=" + std::to_string(a));
      }
      const auto prefix = lift(c, 200);
      const auto dominant = dominant_colors(prefix);
      check.expect(std::ranges::find(dominant, prefix(1)) != dominant.end(), pk(d.p, d.k) + ": c(1) not dominant");
      check.expect(string_shift_check(prefix, d.k, prefix(1)).empty(), pk(d.p, d.k) + ": string shift violation");
    }
  }
  return check.done();
}

CheckResult rb_agreement(const VerifyConfig& cfg) {
  Check check("rb_theorem_agreement");
  for (u64 p : cfg.class_primes) {
    for (u64 k : {2u, 4u, 5u}) {
      const auto res = rb_bruteforce(p, k, 4, cfg.search);
      check.expect(res.rb.has_value() && res.rb == rb_predicted(p, k),
                   pk(p, k) + ": brute-force rb disagrees with the closed form");
    }
  }
  return check.done();
}

CheckResult density(const VerifyConfig& cfg) {
  Check check("density_experiment");
  DensityExperimentConfig dc;
  dc.k = 2;
  dc.N = 200;
  dc.trials = cfg.density_trials;
  dc.seed = cfg.seed;
  dc.margin = 0.02;
  dc.threads = cfg.search.threads;
  const auto rep = density_experiment(dc);
  check.expect(rep.generator_feasible, "generator could not meet the density target");
  check.expect(rep.without_rainbow == 0, std::to_string(rep.without_rainbow) + " dense colorings without a rainbow");
  return check.done();
}

}  // namespace

std::vector<CheckResult> verify_all(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  std::vector<ClassData> data;
  out.push_back(cycle_vertex_sweep(cfg));
  out.push_back(component_sweep(cfg));
  out.push_back(classification(cfg, data));
  out.push_back(min_class_bounds(cfg, data));
  out.push_back(frobenius_oracle());
  out.push_back(lift_soundness(cfg, data));
  out.push_back(structural_lemmas(data));
  out.push_back(rb_agreement(cfg));
  out.push_back(density(cfg));
  return out;
}

}  // namespace rainbowlab

#include "rainbowlab/classifier.hpp"

#include <algorithm>
#include <string>

#include "union_find.hpp"

namespace rainbowlab {

namespace {

constexpr std::size_t kMaxCounterexamples = 8;
constexpr std::size_t kMaxGenerateUnits = 25;

void require_prime_modulus(std::size_t n, const char* what) {
  if (!is_prime(n)) throw DomainError(std::string(what) + ": modulus " + std::to_string(n) + " is not prime");
}

}  // namespace

const char* to_string(Condition c) {
  switch (c) {
    case Condition::ZeroSingleton: return "zero_singleton";
    case Condition::ComponentsMonochromatic: return "components_monochromatic";
    case Condition::NegationSymmetric: return "negation_symmetric";
  }
  return "?";
}

StructuralReport structural_check(const Coloring& c, const PowerDigraph& g) {
  require_prime_modulus(g.n(), "structural_check");
  if (c.size() != g.n()) throw DomainError("structural_check: coloring and digraph sizes differ");
  const Vertex p = static_cast<Vertex>(g.n());
  StructuralReport rep;

  std::vector<Vertex> shares_zero;
  for (Vertex a = 1; a < p; ++a) {
    if (c[a] == c[0]) shares_zero.push_back(a);
  }
  rep.zero_singleton = shares_zero.empty();
  if (!rep.zero_singleton) {
    shares_zero.insert(shares_zero.begin(), 0);
    if (shares_zero.size() > kMaxCounterexamples) shares_zero.resize(kMaxCounterexamples);
    rep.counterexamples.push_back({Condition::ZeroSingleton, std::move(shares_zero)});
  }

  // One offending edge per non-monochromatic component.
  rep.components_monochromatic = true;
  std::vector<bool> reported(g.component_count(), false);
  std::size_t edge_examples = 0;
  for (Vertex a = 0; a < p; ++a) {
    const Vertex b = g.successor(a);
    if (c[a] == c[b]) continue;
    rep.components_monochromatic = false;
    const Vertex comp = g.component_of(a);
    if (!reported[comp] && edge_examples < kMaxCounterexamples) {
      reported[comp] = true;
      ++edge_examples;
      rep.counterexamples.push_back({Condition::ComponentsMonochromatic, {a, b}});
    }
  }

  rep.negation_symmetric = true;
  std::size_t neg_examples = 0;
  for (Vertex a = 1; a <= p / 2; ++a) {
    if (c[a] == c[p - a]) continue;
    rep.negation_symmetric = false;
    if (neg_examples++ < kMaxCounterexamples) {
      rep.counterexamples.push_back({Condition::NegationSymmetric, {a, p - a}});
    }
  }

  rep.overall = rep.zero_singleton && rep.components_monochromatic && rep.negation_symmetric;
  return rep;
}

std::vector<Coloring> generate_rainbow_free(u64 p, u64 k) {
  if (p < 3 || !is_prime(p)) throw DomainError("generate_rainbow_free: p must be an odd prime");
  const auto g = PowerDigraph::build(p, k);

  // Components paired by negation must share a color; such a group is one unit.
  detail::UnionFind uf(g.component_count());
  for (Vertex a = 1; a < p; ++a) uf.join(g.component_of(a), g.component_of(static_cast<Vertex>(p - a)));

  // unit_of[component] in order of the unit's smallest residue; vertex 1 is in unit 0.
  std::vector<int> unit_of(g.component_count(), -1);
  std::vector<int> root_unit(g.component_count(), -1);
  int units = 0;
  for (Vertex a = 1; a < p; ++a) {
    const Vertex comp = g.component_of(a);
    if (unit_of[comp] >= 0) continue;
    const Vertex root = uf.find(comp);
    if (root_unit[root] < 0) root_unit[root] = units++;
    unit_of[comp] = root_unit[root];
  }
  if (units < 2) return {};
  if (static_cast<std::size_t>(units) > kMaxGenerateUnits) {
    throw DomainError("generate_rainbow_free: " + std::to_string(units) + " color units is too many to enumerate");
  }

  // Unit 0 takes color 1; each mask picks which other units join color 2.
  std::vector<Coloring> out;
  const std::uint32_t masks = std::uint32_t{1} << (units - 1);
  for (std::uint32_t mask = 1; mask < masks; ++mask) {
    std::vector<Color> colors(p, 0);
    for (Vertex a = 1; a < p; ++a) {
      const int unit = unit_of[g.component_of(a)];
      colors[a] = (unit > 0 && (mask >> (unit - 1)) & 1) ? 2 : 1;
    }
    out.push_back(canonicalize(Coloring(std::move(colors), 3)));
  }
  std::ranges::sort(out);
  return out;
}

bool check_ak_dominance(const Coloring& c, u64 a, u64 k) {
  const u64 p = c.size();
  require_prime_modulus(p, "check_ak_dominance");
  a %= p;
  if (a == 0) throw DomainError("check_ak_dominance: a must be nonzero mod p");
  const u64 step = pow_mod(a, k, p);
  const Color dominant = c[a];
  u64 cur = 0;
  for (u64 i = 0; i + 1 < p; ++i) {
    const u64 next = (cur + step) % p;
    const Color u = c[cur];
    const Color v = c[next];
    if (u != v && u != dominant && v != dominant) return false;
    cur = next;
  }
  return true;
}

bool generic_monochromatic_check(const Coloring& c, std::span<const Vertex> f_table) {
  const std::size_t n = c.size();
  if (f_table.size() != n) throw DomainError("generic_monochromatic_check: table size differs from coloring");
  detail::UnionFind uf(n);
  for (Vertex a = 0; a < n; ++a) {
    if (f_table[a] >= n) throw DomainError("generic_monochromatic_check: table entry out of range");
    uf.join(a, f_table[a]);
  }
  // Per root: color bitmask of the component.
  std::vector<std::uint32_t> seen(n, 0);
  for (Vertex a = 0; a < n; ++a) seen[uf.find(a)] |= std::uint32_t{1} << c[a];
  const std::uint32_t zero_bit = std::uint32_t{1} << c[0];
  for (Vertex a = 0; a < n; ++a) {
    const std::uint32_t mask = seen[a];
    if (mask == 0 || (mask & zero_bit) != 0) continue;
    if ((mask & (mask - 1)) != 0) return false;
  }
  return true;
}

}  // namespace rainbowlab

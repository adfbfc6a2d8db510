#include "rainbowlab/power_digraph.hpp"

#include <sstream>

#include "union_find.hpp"

namespace rainbowlab {

using detail::UnionFind;

PowerDigraph PowerDigraph::build(u64 n, u64 k) {
  if (n < 2 || n > kMaxDigraphOrder) {
    throw DomainError("power digraph: n must lie in [2, 10^6], got " + std::to_string(n));
  }
  if (k < 2) throw DomainError("power digraph: k must be >= 2, got " + std::to_string(k));

  PowerDigraph g;
  g.n_ = n;
  g.k_ = k;
  g.successor_.resize(n);
  for (u64 a = 0; a < n; ++a) g.successor_[a] = static_cast<Vertex>(pow_mod(a, k, n));

  UnionFind uf(n);
  for (Vertex a = 0; a < n; ++a) uf.join(a, g.successor_[a]);

  // Roots are relabelled in order of first (smallest) vertex.
  std::vector<Vertex> label(n, UINT32_MAX);
  g.component_id_.resize(n);
  for (Vertex a = 0; a < n; ++a) {
    Vertex root = uf.find(a);
    if (label[root] == UINT32_MAX) label[root] = static_cast<Vertex>(g.component_count_++);
    g.component_id_[a] = label[root];
  }

  // Walk each unvisited path; revisiting a vertex of the current walk closes a cycle.
  enum : std::uint8_t { kUnseen, kOnPath, kDone };
  std::vector<std::uint8_t> state(n, kUnseen);
  g.cycle_flag_.assign(n, false);
  for (Vertex start = 0; start < n; ++start) {
    if (state[start] != kUnseen) continue;
    Vertex v = start;
    while (state[v] == kUnseen) {
      state[v] = kOnPath;
      v = g.successor_[v];
    }
    if (state[v] == kOnPath) {
      Vertex u = v;
      do {
        g.cycle_flag_[u] = true;
        u = g.successor_[u];
      } while (u != v);
    }
    for (v = start; state[v] == kOnPath; v = g.successor_[v]) state[v] = kDone;
  }
  return g;
}

std::vector<std::vector<Vertex>> PowerDigraph::components() const {
  std::vector<std::vector<Vertex>> out(component_count_);
  for (Vertex a = 0; a < n_; ++a) out[component_id_[a]].push_back(a);
  return out;
}

std::vector<Vertex> cycle_vertices(const PowerDigraph& g) {
  std::vector<Vertex> out;
  for (Vertex a = 0; a < g.n(); ++a) {
    if (g.is_cycle_vertex(a)) out.push_back(a);
  }
  return out;
}

CycleCount predicted_vs_actual_cycle_count(u64 p, u64 k) {
  if (p < 3 || !is_prime(p)) throw DomainError("cycle count prediction needs an odd prime, got " + std::to_string(p));
  const auto g = PowerDigraph::build(p, k);
  return {t_decomposition(p - 1, k).t + 1, cycle_vertices(g).size()};
}

const char* to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::ExactlyTwo: return "ExactlyTwo";
    case ComponentKind::ExactlyThree: return "ExactlyThree";
    case ComponentKind::MoreThanPredicted: return "MoreThanPredicted";
    case ComponentKind::OutOfTheoremScope: return "OutOfTheoremScope";
  }
  return "?";
}

ComponentPrediction component_prediction(u64 p, u64 k) {
  if (p < 3 || !is_prime(p)) return {ComponentKind::OutOfTheoremScope, "modulus is not an odd prime"};
  if (k < 2) return {ComponentKind::OutOfTheoremScope, "k < 2"};
  if (k % 2 == 1 && k <= 3) return {ComponentKind::OutOfTheoremScope, "odd k must exceed 3"};
  const auto td = t_decomposition(p - 1, k);
  const bool even = k % 2 == 0;
  if (support_condition(p, k)) {
    return even ? ComponentPrediction{ComponentKind::ExactlyTwo, "t = 1: only 0 and 1 lie on cycles"}
                : ComponentPrediction{ComponentKind::ExactlyThree, "t = 2: only 0, 1 and -1 lie on cycles"};
  }
  return {ComponentKind::MoreThanPredicted,
          "t = " + std::to_string(td.t) + ": more than " + (even ? "2" : "3") + " components"};
}

std::string export_dot(const PowerDigraph& g, bool cluster_components) {
  std::ostringstream out;
  out << "digraph G_" << g.n() << "_" << g.k() << " {\n";
  out << "  label=\"a^" << g.k() << " mod " << g.n() << "\";\n";
  if (cluster_components) {
    const auto comps = g.components();
    for (std::size_t c = 0; c < comps.size(); ++c) {
      out << "  subgraph cluster_" << c << " {\n";
      for (Vertex a : comps[c]) {
        out << "    " << a << (g.is_cycle_vertex(a) ? " [shape=doublecircle];\n" : ";\n");
      }
      out << "  }\n";
    }
  } else {
    for (Vertex a = 0; a < g.n(); ++a) {
      out << "  " << a << (g.is_cycle_vertex(a) ? " [shape=doublecircle];\n" : ";\n");
    }
  }
  for (Vertex a = 0; a < g.n(); ++a) out << "  " << a << " -> " << g.successor(a) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace rainbowlab

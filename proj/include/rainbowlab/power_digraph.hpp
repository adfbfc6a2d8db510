#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rainbowlab/arith.hpp"

namespace rainbowlab {

using Vertex = std::uint32_t;

inline constexpr u64 kMaxDigraphOrder = 1'000'000;

// Functional digraph of a -> a^k mod n on Z_n.
//
// Components are numbered 0, 1, ... in order of their smallest vertex, so the
// component of 0 is always 0 and the component of 1 is always 1.
class PowerDigraph {
 public:
  static PowerDigraph build(u64 n, u64 k);

  u64 n() const { return n_; }
  u64 k() const { return k_; }
  std::span<const Vertex> successor() const { return successor_; }
  std::span<const Vertex> component_id() const { return component_id_; }
  const std::vector<bool>& cycle_flag() const { return cycle_flag_; }
  std::size_t component_count() const { return component_count_; }

  Vertex successor(Vertex a) const { return successor_[a]; }
  Vertex component_of(Vertex a) const { return component_id_[a]; }
  bool is_cycle_vertex(Vertex a) const { return cycle_flag_[a]; }

  // Vertex lists per component, each ascending.
  std::vector<std::vector<Vertex>> components() const;

 private:
  PowerDigraph() = default;

  u64 n_ = 0;
  u64 k_ = 0;
  std::vector<Vertex> successor_;
  std::vector<Vertex> component_id_;
  std::vector<bool> cycle_flag_;
  std::size_t component_count_ = 0;
};

// Ascending list of vertices lying on directed cycles.
std::vector<Vertex> cycle_vertices(const PowerDigraph& g);

struct CycleCount {
  u64 predicted = 0;  // t + 1
  u64 actual = 0;
};

CycleCount predicted_vs_actual_cycle_count(u64 p, u64 k);

enum class ComponentKind { ExactlyTwo, ExactlyThree, MoreThanPredicted, OutOfTheoremScope };

struct ComponentPrediction {
  ComponentKind kind = ComponentKind::OutOfTheoremScope;
  std::string reason;
};

const char* to_string(ComponentKind kind);

// Scope: odd prime p; even k, or odd k > 3.
ComponentPrediction component_prediction(u64 p, u64 k);

std::string export_dot(const PowerDigraph& g, bool cluster_components = false);

}  // namespace rainbowlab

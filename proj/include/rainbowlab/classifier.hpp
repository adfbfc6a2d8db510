#pragma once

#include <span>
#include <vector>

#include "rainbowlab/coloring.hpp"
#include "rainbowlab/power_digraph.hpp"

namespace rainbowlab {

// The three conditions characterising rainbow-free exact 3-colorings of Z_p.
enum class Condition { ZeroSingleton, ComponentsMonochromatic, NegationSymmetric };

const char* to_string(Condition c);

struct Counterexample {
  Condition condition;
  std::vector<Vertex> residues;
};

struct StructuralReport {
  bool zero_singleton = false;
  bool components_monochromatic = false;
  bool negation_symmetric = false;
  bool overall = false;
  std::vector<Counterexample> counterexamples;  // at most a handful per condition
};

// g must be the power digraph of a prime modulus matching c.
StructuralReport structural_check(const Coloring& c, const PowerDigraph& g);

// Every exact 3-coloring satisfying the three conditions, canonical and sorted.
std::vector<Coloring> generate_rainbow_free(u64 p, u64 k);

// Whether c(a) lies in every two-colored run of 0, a^k, 2a^k, ..., (p-1)a^k.
bool check_ak_dominance(const Coloring& c, u64 a, u64 k);

// For the functional graph of f_table: every component whose colors avoid
// c(0) is monochromatic.
bool generic_monochromatic_check(const Coloring& c, std::span<const Vertex> f_table);

}  // namespace rainbowlab

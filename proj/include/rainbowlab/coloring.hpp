#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rainbowlab/arith.hpp"

namespace rainbowlab {

using Color = std::uint8_t;

inline constexpr unsigned kMaxColors = 16;

// Assignment of color ids in [0, r) to the residues 0..n-1 of Z_n.
class Coloring {
 public:
  Coloring() = default;
  Coloring(std::vector<Color> colors, unsigned r);

  std::size_t size() const { return colors_.size(); }
  unsigned r() const { return r_; }
  Color operator[](std::size_t i) const { return colors_[i]; }
  std::span<const Color> colors() const { return colors_; }

  std::vector<std::size_t> class_sizes() const;
  std::size_t min_class_size() const;  // over the r declared classes

  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend auto operator<=>(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> colors_;
  unsigned r_ = 0;
};

// Relabel colors so they first appear in the order 0, 1, 2, ...
Coloring canonicalize(const Coloring& c);

bool is_exact(const Coloring& c);

// Ordered solution x - y = z^k (mod n) whose entries carry three distinct colors.
struct RainbowCertificate {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  std::uint32_t z = 0;
  friend bool operator==(const RainbowCertificate&, const RainbowCertificate&) = default;
};

// z -> z^k mod n, computed once per (n, k).
class PowerTable {
 public:
  PowerTable(u64 n, u64 k);

  u64 n() const { return n_; }
  u64 k() const { return k_; }
  std::uint32_t operator[](std::size_t z) const { return table_[z]; }
  std::span<const std::uint32_t> values() const { return table_; }

 private:
  u64 n_;
  u64 k_;
  std::vector<std::uint32_t> table_;
};

// Scans z ascending, then y ascending, with x = y + z^k mod n; returns the
// first rainbow triple.
std::optional<RainbowCertificate> find_rainbow_mod(const Coloring& c, const PowerTable& powers);
std::optional<RainbowCertificate> find_rainbow_mod(const Coloring& c, u64 k);

bool is_rainbow_free(const Coloring& c, const PowerTable& powers);
bool is_rainbow_free(const Coloring& c, u64 k);

// `assigned` holds the colors of residues 0..m where m = newly_assigned. True
// iff some solution inside {0..m} that uses residue m is rainbow.
bool incremental_rainbow_check(std::span<const Color> assigned, const PowerTable& powers,
                               std::size_t newly_assigned);

}  // namespace rainbowlab

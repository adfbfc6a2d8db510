#include "rainbowlab/coloring.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace rainbowlab {

Coloring::Coloring(std::vector<Color> colors, unsigned r) : colors_(std::move(colors)), r_(r) {
  if (r == 0 || r > kMaxColors) throw DomainError("coloring: r must lie in [1, 16]");
  for (Color c : colors_) {
    if (c >= r) throw DomainError("coloring: color id " + std::to_string(c) + " out of range for r = " + std::to_string(r));
  }
}

std::vector<std::size_t> Coloring::class_sizes() const {
  std::vector<std::size_t> sizes(r_, 0);
  for (Color c : colors_) ++sizes[c];
  return sizes;
}

std::size_t Coloring::min_class_size() const {
  const auto sizes = class_sizes();
  return sizes.empty() ? 0 : *std::min_element(sizes.begin(), sizes.end());
}

Coloring canonicalize(const Coloring& c) {
  std::array<int, kMaxColors> relabel;
  relabel.fill(-1);
  int next = 0;
  std::vector<Color> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    int& label = relabel[c[i]];
    if (label < 0) label = next++;
    out[i] = static_cast<Color>(label);
  }
  return Coloring(std::move(out), c.r());
}

bool is_exact(const Coloring& c) {
  return std::ranges::none_of(c.class_sizes(), [](std::size_t s) { return s == 0; });
}

PowerTable::PowerTable(u64 n, u64 k) : n_(n), k_(k), table_(n) {
  if (n < 1 || n > UINT32_MAX) throw DomainError("power table: modulus out of range");
  for (u64 z = 0; z < n; ++z) table_[z] = static_cast<std::uint32_t>(pow_mod(z, k, n));
}

namespace {

bool distinct3(Color a, Color b, Color c) { return a != b && b != c && a != c; }

void require_match(const Coloring& c, const PowerTable& powers) {
  if (c.size() != powers.n()) throw DomainError("coloring size does not match the power table modulus");
}

}  // namespace

std::optional<RainbowCertificate> find_rainbow_mod(const Coloring& c, const PowerTable& powers) {
  require_match(c, powers);
  const std::uint32_t n = static_cast<std::uint32_t>(c.size());
  for (std::uint32_t z = 0; z < n; ++z) {
    const std::uint32_t zk = powers[z];
    for (std::uint32_t y = 0; y < n; ++y) {
      std::uint32_t x = y + zk;
      if (x >= n) x -= n;
      if (distinct3(c[x], c[y], c[z])) return RainbowCertificate{x, y, z};
    }
  }
  return std::nullopt;
}

std::optional<RainbowCertificate> find_rainbow_mod(const Coloring& c, u64 k) {
  return find_rainbow_mod(c, PowerTable(c.size(), k));
}

bool is_rainbow_free(const Coloring& c, const PowerTable& powers) { return !find_rainbow_mod(c, powers); }

bool is_rainbow_free(const Coloring& c, u64 k) { return !find_rainbow_mod(c, k); }

bool incremental_rainbow_check(std::span<const Color> assigned, const PowerTable& powers,
                               std::size_t newly_assigned) {
  const std::size_t m = newly_assigned;
  const std::size_t n = powers.n();
  if (m >= assigned.size() || m >= n) throw DomainError("incremental_rainbow_check: position not assigned");
  const Color cm = assigned[m];
  auto sub = [n](std::size_t a, std::size_t b) { return (a + n - b) % n; };
  for (std::size_t z = 0; z <= m; ++z) {
    const std::size_t zk = powers[z];
    // m as x: y = m - z^k
    if (std::size_t y = sub(m, zk); y <= m && distinct3(cm, assigned[y], assigned[z])) return true;
    // m as y: x = m + z^k
    if (std::size_t x = (m + zk) % n; x <= m && distinct3(assigned[x], cm, assigned[z])) return true;
  }
  // m as z
  const std::size_t mk = powers[m];
  for (std::size_t y = 0; y <= m; ++y) {
    if (std::size_t x = (y + mk) % n; x <= m && distinct3(assigned[x], assigned[y], cm)) return true;
  }
  return false;
}

}  // namespace rainbowlab

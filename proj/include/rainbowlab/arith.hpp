#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rainbowlab {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// Thrown when an input lies outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Largest input accepted by factorize (trial division stays cheap below it).
inline constexpr u64 kFactorLimit = u64{1} << 42;

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  u64 n = 0;
  std::vector<PrimePower> factors;  // primes strictly increasing
};

// m = w * t, where t is the largest divisor of m coprime to k and every prime
// of w divides k.
struct TDecomposition {
  u64 m = 0;
  u64 k = 0;
  u64 t = 0;
  u64 w = 0;
};

u64 gcd(u64 a, u64 b);
u64 mul_mod(u64 a, u64 b, u64 mod);
u64 pow_mod(u64 base, u64 exp, u64 mod);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(u64 n);

Factorization factorize(u64 n);
u64 smallest_prime_factor(u64 n);

// Smallest e >= 1 with a^e = 1 (mod p). p must be prime, a not divisible by p.
u64 multiplicative_order(u64 a, u64 p);

TDecomposition t_decomposition(u64 m, u64 k);

// Theorem-scope predicate for the power digraph / rainbow-number results:
// t(p-1, k) <= 2. For even k this is "every odd prime of p-1 divides k"; for
// odd k it additionally forces p = 3 (mod 4).
bool support_condition(u64 p, u64 k);

// The factor-shape test "every odd prime dividing p-1 divides k" on its own.
// Agrees with support_condition for even k only.
bool odd_prime_support_subset(u64 p, u64 k);

// Least n0 such that every multiple of gcd(i, j) above n0 is u*i + v*j with
// u, v >= 0. Returns -gcd(i, j) when every nonnegative multiple is
// representable.
i64 frobenius_bound(u64 i, u64 j);

// Odd prime p with p - 1 a power of two.
bool is_fermat_prime(u64 p);

}  // namespace rainbowlab

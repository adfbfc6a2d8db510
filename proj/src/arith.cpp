#include "rainbowlab/arith.hpp"

#include <string>

namespace rainbowlab {

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

u64 mul_mod(u64 a, u64 b, u64 mod) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % mod);
}

u64 pow_mod(u64 base, u64 exp, u64 mod) {
  if (mod == 1) return 0;
  u64 result = 1;
  base %= mod;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are sufficient for all n < 2^64.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n < 2) throw DomainError("factorize: n must be >= 2, got " + std::to_string(n));
  if (n > kFactorLimit) throw DomainError("factorize: n exceeds 2^42: " + std::to_string(n));
  Factorization f{n, {}};
  auto take = [&](u64 q) {
    unsigned e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (e != 0) f.factors.push_back({q, e});
  };
  take(2);
  for (u64 q = 3; q * q <= n; q += 2) {
    if (n % q == 0) take(q);
  }
  if (n > 1) f.factors.push_back({n, 1});
  return f;
}

u64 smallest_prime_factor(u64 n) { return factorize(n).factors.front().prime; }

u64 multiplicative_order(u64 a, u64 p) {
  if (!is_prime(p)) throw DomainError("multiplicative_order: modulus is not prime: " + std::to_string(p));
  a %= p;
  if (a == 0) throw DomainError("multiplicative_order: a = 0 mod p has no order");
  if (p == 2) return 1;
  u64 order = p - 1;
  for (const auto& [q, e] : factorize(p - 1).factors) {
    for (unsigned i = 0; i < e; ++i) {
      if (pow_mod(a, order / q, p) != 1) break;
      order /= q;
    }
  }
  return order;
}

TDecomposition t_decomposition(u64 m, u64 k) {
  if (m < 1) throw DomainError("t_decomposition: m must be >= 1");
  if (k < 2) throw DomainError("t_decomposition: k must be >= 2");
  u64 t = m;
  for (const auto& pp : factorize(k).factors) {
    while (t % pp.prime == 0) t /= pp.prime;
  }
  return {m, k, t, m / t};
}

namespace {

void require_odd_prime(u64 p, const char* what) {
  if (p < 3 || !is_prime(p)) {
    throw DomainError(std::string(what) + ": p must be an odd prime, got " + std::to_string(p));
  }
}

}  // namespace

bool support_condition(u64 p, u64 k) {
  require_odd_prime(p, "support_condition");
  return t_decomposition(p - 1, k).t <= 2;
}

bool odd_prime_support_subset(u64 p, u64 k) {
  require_odd_prime(p, "odd_prime_support_subset");
  if (k < 2) throw DomainError("odd_prime_support_subset: k must be >= 2");
  for (const auto& pp : factorize(p - 1).factors) {
    if (pp.prime != 2 && k % pp.prime != 0) return false;
  }
  return true;
}

i64 frobenius_bound(u64 i, u64 j) {
  if (i == 0 || j == 0) throw DomainError("frobenius_bound: generators must be positive");
  const u64 g = gcd(i, j);
  const u64 a = i / g;
  const u64 b = j / g;
  if (a == 1 || b == 1) return -static_cast<i64>(g);
  return static_cast<i64>(g * (a * b - a - b));
}

bool is_fermat_prime(u64 p) {
  if (p < 3 || !is_prime(p)) return false;
  const u64 m = p - 1;
  return (m & (m - 1)) == 0;
}

}  // namespace rainbowlab

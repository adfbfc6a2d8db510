#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rainbowlab/arith.hpp"

using namespace rainbowlab;

TEST_CASE("factorize small values") {
  CHECK(factorize(12).factors == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK(factorize(10).factors == std::vector<PrimePower>{{2, 1}, {5, 1}});
  CHECK(factorize(97).factors == std::vector<PrimePower>{{97, 1}});
  CHECK(factorize(4294967291ULL).factors == std::vector<PrimePower>{{4294967291ULL, 1}});
  CHECK_THROWS_AS(factorize(1), DomainError);
  CHECK_THROWS_AS(factorize(0), DomainError);
}

TEST_CASE("factorization invariants hold up to 5000") {
  for (u64 n = 2; n <= 5000; ++n) {
    const auto f = factorize(n);
    u64 product = 1;
    u64 prev = 0;
    for (const auto& [p, e] : f.factors) {
      REQUIRE(p > prev);
      REQUIRE(oracle::naive_is_prime(p));
      REQUIRE(e >= 1);
      for (unsigned i = 0; i < e; ++i) product *= p;
      prev = p;
    }
    REQUIRE(product == n);
  }
}

TEST_CASE("is_prime matches trial division") {
  for (u64 n = 0; n < 20000; ++n) REQUIRE(is_prime(n) == oracle::naive_is_prime(n));
  CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  CHECK_FALSE(is_prime(3215031751ULL));      // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("multiplicative order examples") {
  CHECK(multiplicative_order(1, 11) == 1);
  CHECK(multiplicative_order(3, 11) == 5);
  CHECK(multiplicative_order(10, 11) == 2);
  CHECK_THROWS_AS(multiplicative_order(0, 11), DomainError);
  CHECK_THROWS_AS(multiplicative_order(22, 11), DomainError);
  CHECK_THROWS_AS(multiplicative_order(2, 9), DomainError);
}

TEST_CASE("multiplicative order agrees with iteration and divides p - 1") {
  for (u64 p = 3; p < 400; ++p) {
    if (!oracle::naive_is_prime(p)) continue;
    for (u64 a = 1; a < p; ++a) {
      const u64 e = multiplicative_order(a, p);
      REQUIRE(e == oracle::order_by_iteration(a, p));
      REQUIRE((p - 1) % e == 0);
    }
  }
}

TEST_CASE("t decomposition examples") {
  auto td = t_decomposition(10, 2);
  CHECK(td.t == 5);
  CHECK(td.w == 2);
  td = t_decomposition(12, 5);
  CHECK(td.t == 12);
  CHECK(td.w == 1);
  td = t_decomposition(16, 2);
  CHECK(td.t == 1);
  CHECK(td.w == 16);
  CHECK_THROWS_AS(t_decomposition(0, 2), DomainError);
  CHECK_THROWS_AS(t_decomposition(5, 1), DomainError);
}

TEST_CASE("t is the largest divisor coprime to k") {
  for (u64 m = 1; m <= 10000; ++m) {
    for (u64 k = 2; k <= 12; ++k) {
      const auto td = t_decomposition(m, k);
      REQUIRE(td.t * td.w == m);
      REQUIRE(std::gcd(td.t, k) == 1);
      for (u64 d = td.t + 1; d <= m; ++d) {
        if (m % d == 0) REQUIRE(std::gcd(d, k) != 1);
      }
      if (td.w > 1) REQUIRE(std::gcd(td.w, k) > 1);
    }
  }
}

TEST_CASE("support condition examples") {
  CHECK(support_condition(5, 2));
  CHECK_FALSE(support_condition(7, 2));
  CHECK_FALSE(support_condition(13, 5));
  CHECK(support_condition(11, 5));
  CHECK(support_condition(17, 2));
  CHECK_THROWS_AS(support_condition(9, 2), DomainError);
  CHECK_THROWS_AS(support_condition(2, 2), DomainError);
}

TEST_CASE("support condition equals the factor shape for even k") {
  for (u64 p = 3; p < 2000; p += 2) {
    if (!is_prime(p)) continue;
    for (u64 k = 2; k <= 12; k += 2) REQUIRE(support_condition(p, k) == odd_prime_support_subset(p, k));
  }
}

TEST_CASE("factor shape alone overshoots for odd k when 4 | p - 1") {
  // p - 1 = 4 has no odd prime factor, yet t(4, 5) = 4: x -> x^5 fixes every residue of Z_5.
  CHECK(odd_prime_support_subset(5, 5));
  CHECK_FALSE(support_condition(5, 5));
  CHECK(t_decomposition(4, 5).t == 4);
  for (u64 p = 3; p < 2000; p += 2) {
    if (!is_prime(p)) continue;
    for (u64 k = 5; k <= 11; k += 2) {
      REQUIRE(support_condition(p, k) == (odd_prime_support_subset(p, k) && p % 4 == 3));
    }
  }
}

TEST_CASE("frobenius bound examples") {
  CHECK(frobenius_bound(3, 5) == 7);
  CHECK(frobenius_bound(6, 10) == 14);
  CHECK(frobenius_bound(1, 9) == -1);
  CHECK(frobenius_bound(4, 4) == -4);
  CHECK_THROWS_AS(frobenius_bound(0, 3), DomainError);
}

TEST_CASE("frobenius bound matches a representability sieve") {
  for (u64 i = 1; i <= 50; ++i) {
    for (u64 j = 1; j <= 50; ++j) {
      const u64 g = std::gcd(i, j);
      const u64 limit = i * j + i + j;
      std::vector<bool> rep(limit + 1, false);
      for (u64 u = 0; u * i <= limit; ++u) {
        for (u64 v = 0; u * i + v * j <= limit; ++v) rep[u * i + v * j] = true;
      }
      i64 expected = -static_cast<i64>(g);
      for (u64 s = 0; s <= limit; s += g) {
        if (!rep[s]) expected = static_cast<i64>(s);
      }
      REQUIRE(frobenius_bound(i, j) == expected);
    }
  }
}

TEST_CASE("fermat primes") {
  CHECK(is_fermat_prime(5));
  CHECK_FALSE(is_fermat_prime(11));
  CHECK(is_fermat_prime(17));
  CHECK(is_fermat_prime(3));
  CHECK(is_fermat_prime(257));
  CHECK(is_fermat_prime(65537));
  CHECK_FALSE(is_fermat_prime(2));
  CHECK_FALSE(is_fermat_prime(9));
  CHECK_FALSE(is_fermat_prime(0));
  int count = 0;
  for (u64 p = 0; p < 70000; ++p) count += is_fermat_prime(p);
  CHECK(count == 5);
}

TEST_CASE("pow_mod does not overflow near 2^64") {
  const u64 m = 18446744073709551557ULL;
  CHECK(pow_mod(m - 1, 2, m) == 1);
  CHECK(pow_mod(2, m - 1, m) == 1);
  CHECK(pow_mod(5, 0, 7) == 1);
  CHECK(pow_mod(5, 3, 1) == 0);
}

#include <gtest/gtest.h>

#include "cmf/arith.hpp"
#include "oracles.hpp"

using namespace cmf;

TEST(Arith, PrimeCountBelowTenThousand) {
  EXPECT_EQ(primes_up_to(10000).size(), 1229U);
  EXPECT_EQ(primes_up_to(1).size(), 0U);
  EXPECT_EQ(primes_up_to(2).size(), 1U);
}

TEST(Arith, IsPrimeAgreesWithSieve) {
  const auto ps = primes_up_to(5000);
  std::vector<bool> mark(5001, false);
  for (auto p : ps) mark[p] = true;
  for (std::uint64_t n = 0; n <= 5000; ++n) EXPECT_EQ(is_prime(n), mark[n]) << n;
}

TEST(Arith, SmallestPrimeFactor) {
  const auto spf = smallest_prime_factors(1000);
  for (std::uint64_t n = 2; n <= 1000; ++n) {
    std::uint64_t d = 2;
    while (n % d != 0) ++d;
    EXPECT_EQ(spf[n], d) << n;
  }
}

TEST(Arith, KroneckerMatchesEulerCriterion) {
  for (auto p : primes_up_to(400)) {
    if (p == 2) continue;
    for (std::int64_t a = -60; a <= 60; ++a)
      EXPECT_EQ(kronecker(a, static_cast<std::int64_t>(p)), oracle::legendre(a, p)) << a << " " << p;
  }
}

TEST(Arith, KroneckerAtTwo) {
  // (a/2) = 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8
  for (std::int64_t a = -40; a <= 40; ++a) {
    const auto r = floor_mod(a, 8);
    const int want = a % 2 == 0 ? 0 : (r == 1 || r == 7) ? 1 : -1;
    EXPECT_EQ(kronecker(a, 2), want) << a;
  }
}

TEST(Arith, KroneckerMultiplicativeInDenominator) {
  for (std::int64_t a : {-8, -4, -3, 5, 12}) {
    for (std::int64_t m = 1; m <= 60; ++m)
      for (std::int64_t n = 1; n <= 60; ++n)
        EXPECT_EQ(kronecker(a, m * n), kronecker(a, m) * kronecker(a, n)) << a << " " << m << " " << n;
  }
}

TEST(Arith, NebentypusCharactersArePeriodic) {
  for (std::int64_t n = 1; n <= 200; ++n) {
    EXPECT_EQ(kronecker(-3, n), kronecker(-3, n + 3));
    EXPECT_EQ(kronecker(-4, n), kronecker(-4, n + 4));
    EXPECT_EQ(kronecker(-8, n), kronecker(-8, n + 8));
  }
}

TEST(Arith, FloorModIsNonnegative) {
  EXPECT_EQ(floor_mod(std::int64_t{-7}, 3), 2);
  EXPECT_EQ(floor_mod(Int(-7), Int(3)), 2);
  EXPECT_EQ(floor_mod(Int(7), Int(3)), 1);
}

TEST(Arith, InvmodAndMulmod) {
  for (std::uint64_t p : {3ULL, 97ULL, 1000003ULL}) {
    for (std::uint64_t a = 1; a < std::min<std::uint64_t>(p, 200); ++a) EXPECT_EQ(mulmod(a, invmod(a, p), p), 1U);
  }
  const std::uint64_t big = (1ULL << 62) + 135;
  EXPECT_EQ(mulmod(big, 2, big), 0U);
}

TEST(Arith, ExactSqrt) {
  for (std::uint64_t n = 0; n <= 3000; ++n) {
    const auto r = exact_sqrt(n);
    const auto s = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(n))));
    EXPECT_EQ(r.has_value(), s * s == n) << n;
    if (r) {
      EXPECT_EQ(*r, s);
    }
  }
}

TEST(Arith, IpowAndValuation) {
  EXPECT_EQ(ipow(Int(-3), 5), -243);
  EXPECT_EQ(ipow(Int(7), 0), 1);
  EXPECT_EQ(valuation(48, 2), 4);
  EXPECT_EQ(valuation(48, 3), 1);
  EXPECT_EQ(valuation(49, 5), 0);
}

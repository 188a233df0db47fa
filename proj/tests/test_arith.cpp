#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "psisum/primes.hpp"
#include "psisum/psi_formulas.hpp"
#include "psisum/rational.hpp"

using namespace psisum;

namespace {

// Independent of the library: direct gcd count and naive order sum.
std::uint64_t naive_phi(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t i = 1; i <= n; ++i) c += std::gcd(i, n) == 1;
  return c;
}

std::uint64_t naive_psi_cyclic(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t x = 0; x < n; ++x) s += n / std::gcd(x, n);
  return s;
}

}  // namespace

TEST(Rational, NormalizesSignAndGcd) {
  const Rational r(BigInt(-6), BigInt(-4));
  EXPECT_EQ(r.numerator(), 3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(BigInt(4), BigInt(-8)).to_string(), "-1/2");
  EXPECT_EQ(Rational(5).to_string(), "5/1");
  EXPECT_EQ(Rational(5).to_display_string(), "5");
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST(Rational, ArithmeticAndOrdering) {
  EXPECT_EQ(Rational(1, 3) + Rational(6, 25), Rational(43, 75));
  EXPECT_LT(Rational(43, 75), Rational(7, 11));
  EXPECT_EQ(Rational(7, 11) * Rational(77), Rational(49));
  EXPECT_EQ(Rational(7, 11) / Rational(7, 11), Rational(1));
  EXPECT_GT(Rational(-1, 2), Rational(-2, 3));
  EXPECT_EQ(-Rational(3, 4), Rational(-3, 4));
}

TEST(Rational, ParseRoundTrip) {
  for (const char* text : {"0/1", "-7/11", "301/11", "1/123456789012345678901234567890"}) {
    EXPECT_EQ(Rational::parse(text).to_string(), text);
  }
  EXPECT_EQ(Rational::parse("14/22"), Rational(7, 11));
  EXPECT_EQ(Rational::parse("27"), Rational(27));
  EXPECT_THROW(Rational::parse("1/0"), std::exception);
  EXPECT_THROW(Rational::parse("abc"), std::exception);
}

TEST(Rational, RandomFieldIdentities) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int i = 0; i < 500; ++i) {
    int an = d(rng), ad = d(rng), bn = d(rng), bd = d(rng);
    if (ad == 0 || bd == 0) continue;
    const Rational a{BigInt(an), BigInt(ad)}, b{BigInt(bn), BigInt(bd)};
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(a * b, b * a);
    if (b != Rational(0)) EXPECT_EQ((a / b) * b, a);
    EXPECT_GT(a.denominator(), 0);
    EXPECT_EQ(boost::multiprecision::gcd(a.numerator(), a.denominator()) == 1 || a.numerator() == 0, true);
  }
}

TEST(Primes, FactorizeExamples) {
  EXPECT_EQ(factorize(12), (Factorization{{2, 2}, {3, 1}}));
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_EQ(factorize(97), (Factorization{{97, 1}}));
  EXPECT_THROW(factorize(0), std::invalid_argument);
}

TEST(Primes, FactorizeReconstructsPastSieve) {
  for (std::uint64_t n : {1000003ULL, 999983ULL * 2ULL, 1000000007ULL, 600851475143ULL, 4096ULL * 3125ULL}) {
    const auto f = factorize(n);
    EXPECT_EQ(expand(f), n);
    for (std::size_t i = 0; i < f.size(); ++i) {
      EXPECT_TRUE(is_prime(f[i].prime));
      if (i) EXPECT_LT(f[i - 1].prime, f[i].prime);
    }
  }
}

TEST(Primes, EulerPhiMatchesGcdCount) {
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(9), 6u);
  EXPECT_THROW(euler_phi(0), std::invalid_argument);
  for (std::uint64_t n = 1; n <= 1000; ++n) EXPECT_EQ(euler_phi(n), naive_phi(n)) << n;
}

TEST(Primes, LeastAndLargestDivisors) {
  EXPECT_EQ(least_prime_divisor(45), 3u);
  EXPECT_EQ(largest_prime_divisor(45), 5u);
  EXPECT_EQ(least_prime_divisor(97), 97u);
  EXPECT_THROW(least_prime_divisor(1), std::invalid_argument);
  EXPECT_TRUE(all_prime_factors_exceed(35, 3));
  EXPECT_FALSE(all_prime_factors_exceed(10, 3));
  EXPECT_TRUE(all_prime_factors_exceed(1, 5));
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(multiplicative_order(2, 5), 4u);
  EXPECT_EQ(inverse_mod(3, 8), 3u);
}

TEST(PsiCyclic, PrimePowerExamples) {
  EXPECT_EQ(psi_cyclic_prime_power(2, 3), 43);
  EXPECT_EQ(psi_cyclic_prime_power(3, 2), psi_cyclic_oracle(9));
  EXPECT_EQ(psi_cyclic_prime_power(3, 2), 61);
  EXPECT_EQ(psi_cyclic_prime_power(5, 0), 1);
  EXPECT_EQ(psi_cyclic_prime_power(2, 4), psi_cyclic_oracle(16));
  EXPECT_THROW(psi_cyclic_prime_power(4, 2), std::invalid_argument);
}

TEST(PsiCyclic, ClosedFormMatchesOracleAndNaiveSum) {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    ASSERT_EQ(psi_cyclic(n), psi_cyclic_oracle(n)) << n;
    if (n <= 1500) ASSERT_EQ(psi_cyclic(n), naive_psi_cyclic(n)) << n;
  }
  EXPECT_EQ(psi_cyclic(12), 77);
  EXPECT_EQ(psi_cyclic(30), 441);
  EXPECT_EQ(psi_cyclic(45), 1281);
  EXPECT_THROW(psi_cyclic(0), std::invalid_argument);
}

TEST(PsiCyclic, MultiplicativeAndOdd) {
  for (std::uint64_t a = 1; a <= 60; ++a)
    for (std::uint64_t b = 1; b <= 60; ++b)
      if (std::gcd(a, b) == 1) ASSERT_EQ(psi_cyclic(a * b), psi_cyclic(a) * psi_cyclic(b));
  for (std::uint64_t n = 1; n <= 5000; ++n) ASSERT_EQ(psi_cyclic(n) % 2, 1) << n;
}

TEST(PsiCyclic, LowerBound) {
  EXPECT_EQ(cyclic_lower_bound(12), Rational(72));
  EXPECT_EQ(cyclic_lower_bound(30), Rational(300));
  for (std::uint64_t n = 2; n <= 5000; ++n) ASSERT_GE(Rational(psi_cyclic(n)), cyclic_lower_bound(n)) << n;
  EXPECT_THROW(cyclic_lower_bound(1), std::invalid_argument);
}

TEST(FRatio, ValuesAndMonotonicity) {
  EXPECT_EQ(f_ratio(2), Rational(7, 11));
  EXPECT_EQ(f_ratio(3), Rational(25, 61));
  EXPECT_THROW(f_ratio(4), std::invalid_argument);
  const auto ps = primes_in_range(2, 97);
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) EXPECT_GT(f_ratio(ps[i]), f_ratio(ps[i + 1]));
  for (std::uint64_t x = 2; x < 200; ++x) {
    EXPECT_GT(f_rational(x), f_rational(x + 1));
    EXPECT_LT(f_rational(x), Rational(1));
  }
}

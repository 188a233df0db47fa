#pragma once

#include <cstdint>
#include <vector>

namespace psisum {

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = prod prime^exponent with primes strictly increasing; empty for n = 1.
using Factorization = std::vector<PrimePower>;

/// Eratosthenes sieve up to a fixed bound. Factorization trial-divides by the
/// sieved primes and falls back to odd trial divisors past the bound.
class PrimeSieve {
 public:
  static constexpr std::uint64_t kDefaultBound = 1'000'000;

  explicit PrimeSieve(std::uint64_t bound = kDefaultBound);

  /// Process-wide sieve with the default bound, built on first use.
  static const PrimeSieve& instance();

  std::uint64_t bound() const { return bound_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }

  bool is_prime(std::uint64_t n) const;
  Factorization factorize(std::uint64_t n) const;

 private:
  std::uint64_t bound_;
  std::vector<bool> composite_;
  std::vector<std::uint64_t> primes_;
};

Factorization factorize(std::uint64_t n);
bool is_prime(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

/// Reconstructs the integer from its factorization.
std::uint64_t expand(const Factorization& f);

std::uint64_t least_prime_divisor(std::uint64_t n);
std::uint64_t largest_prime_divisor(std::uint64_t n);

/// Primes p with lo <= p <= hi, ascending.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// Every prime divisor of k is strictly greater than q (k = 1 qualifies).
bool all_prime_factors_exceed(std::uint64_t k, std::uint64_t q);

std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
/// Least t >= 1 with a^t = 1 (mod m); requires gcd(a, m) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);
/// Inverse of a modulo m; requires gcd(a, m) = 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

}  // namespace psisum

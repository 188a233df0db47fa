#pragma once

#include <cstdint>

#include "psisum/rational.hpp"

namespace psisum {

/// Sum of element orders of the cyclic group of order p^m:
/// (p^(2m+1) + 1) / (p + 1). Throws std::invalid_argument unless p is prime.
BigInt psi_cyclic_prime_power(std::uint64_t p, std::uint32_t m);

/// Sum of element orders of C_n, as the product of the prime-power closed
/// forms over the factorization of n.
BigInt psi_cyclic(std::uint64_t n);

/// Independent route to psi(C_n): sum over divisors d of n of d * phi(d),
/// since C_n holds phi(d) elements of each order d.
BigInt psi_cyclic_oracle(std::uint64_t n);

/// f(q) = ((q^2 - 1) q + 1)(q + 1) / (q^5 + 1), reduced. Defined for primes.
Rational f_ratio(std::uint64_t q);

/// f evaluated at any integer x >= 2 through the same rational formula.
Rational f_rational(std::uint64_t x);

/// q n^2 / (p + 1) with q the least and p the largest prime divisor of n.
Rational cyclic_lower_bound(std::uint64_t n);

BigInt big_pow(std::uint64_t base, std::uint32_t exp);

}  // namespace psisum

#include "psisum/psi_formulas.hpp"

#include <stdexcept>
#include <string>

#include "psisum/primes.hpp"

namespace psisum {

BigInt big_pow(std::uint64_t base, std::uint32_t exp) {
  return boost::multiprecision::pow(BigInt(base), exp);
}

BigInt psi_cyclic_prime_power(std::uint64_t p, std::uint32_t m) {
  if (!is_prime(p))
    throw std::invalid_argument("psi_cyclic_prime_power: " + std::to_string(p) + " is not prime");
  BigInt numerator = big_pow(p, 2 * m + 1) + 1;
  BigInt denominator = BigInt(p) + 1;
  if (numerator % denominator != 0)
    throw std::logic_error("psi_cyclic_prime_power: closed form is not integral");
  return numerator / denominator;
}

BigInt psi_cyclic(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("psi_cyclic: n must be positive");
  BigInt result = 1;
  for (const auto& [p, e] : factorize(n)) result *= psi_cyclic_prime_power(p, e);
  return result;
}

BigInt psi_cyclic_oracle(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("psi_cyclic_oracle: n must be positive");
  BigInt sum = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    sum += BigInt(d) * euler_phi(d);
    const std::uint64_t e = n / d;
    if (e != d) sum += BigInt(e) * euler_phi(e);
  }
  return sum;
}

Rational f_rational(std::uint64_t x) {
  if (x < 2) throw std::invalid_argument("f_rational: x must be at least 2");
  const BigInt q = x;
  return Rational(((q * q - 1) * q + 1) * (q + 1), big_pow(x, 5) + 1);
}

Rational f_ratio(std::uint64_t q) {
  if (!is_prime(q)) throw std::invalid_argument("f_ratio: " + std::to_string(q) + " is not prime");
  return f_rational(q);
}

Rational cyclic_lower_bound(std::uint64_t n) {
  if (n <= 1) throw std::invalid_argument("cyclic_lower_bound: n must be at least 2");
  const auto f = factorize(n);
  const BigInt q = f.front().prime;
  const BigInt p = f.back().prime;
  return Rational(q * BigInt(n) * BigInt(n), p + 1);
}

}  // namespace psisum

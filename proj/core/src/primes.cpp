#include "psisum/primes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace psisum {

PrimeSieve::PrimeSieve(std::uint64_t bound) : bound_(std::max<std::uint64_t>(bound, 2)) {
  composite_.assign(bound_ + 1, false);
  composite_[0] = composite_[1] = true;
  for (std::uint64_t i = 2; i <= bound_; ++i) {
    if (composite_[i]) continue;
    primes_.push_back(i);
    for (std::uint64_t j = i * i; j <= bound_; j += i) composite_[j] = true;
  }
}

const PrimeSieve& PrimeSieve::instance() {
  static const PrimeSieve sieve;
  return sieve;
}

bool PrimeSieve::is_prime(std::uint64_t n) const {
  if (n <= bound_) return !composite_[n];
  auto f = factorize(n);
  return f.size() == 1 && f.front().exponent == 1;
}

Factorization PrimeSieve::factorize(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization out;
  auto take = [&](std::uint64_t p) {
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  for (std::uint64_t p : primes_) {
    if (p * p > n) break;
    take(p);
  }
  if (n > 1 && !primes_.empty() && primes_.back() * primes_.back() < n) {
    // Past the sieve: continue with odd trial divisors.
    for (std::uint64_t d = primes_.back() + 2; d <= n / d; d += 2) take(d);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

Factorization factorize(std::uint64_t n) { return PrimeSieve::instance().factorize(n); }

bool is_prime(std::uint64_t n) { return PrimeSieve::instance().is_prime(n); }

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
  std::uint64_t phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

std::uint64_t expand(const Factorization& f) {
  std::uint64_t n = 1;
  for (const auto& [p, e] : f)
    for (std::uint32_t i = 0; i < e; ++i) n *= p;
  return n;
}

std::uint64_t least_prime_divisor(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("least_prime_divisor: n must be at least 2");
  return factorize(n).front().prime;
}

std::uint64_t largest_prime_divisor(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("largest_prime_divisor: n must be at least 2");
  return factorize(n).back().prime;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = std::max<std::uint64_t>(lo, 2); p <= hi; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

bool all_prime_factors_exceed(std::uint64_t k, std::uint64_t q) {
  if (k == 0) throw std::invalid_argument("all_prime_factors_exceed: k must be positive");
  return k == 1 || least_prime_divisor(k) > q;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t existing = out.size();
    std::uint64_t pk = 1;
    for (std::uint32_t i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < existing; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

__extension__ using u128 = unsigned __int128;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  u128 result = 1;
  u128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("multiplicative_order: modulus must be positive");
  if (m == 1) return 1;
  if (std::gcd(a % m, m) != 1)
    throw std::invalid_argument("multiplicative_order: " + std::to_string(a) +
                                " is not a unit modulo " + std::to_string(m));
  // The order divides phi(m); take the least divisor that works.
  for (std::uint64_t d : divisors(euler_phi(m)))
    if (pow_mod(a, d, m) == 1) return d;
  throw std::logic_error("multiplicative_order: unreachable");
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    std::int64_t quotient = r / new_r;
    t = std::exchange(new_t, t - quotient * new_t);
    r = std::exchange(new_r, r - quotient * new_r);
  }
  if (r != 1) throw std::invalid_argument("inverse_mod: not invertible");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

}  // namespace psisum

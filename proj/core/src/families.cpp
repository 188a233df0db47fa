#include "psisum/families.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "psisum/primes.hpp"

namespace psisum {

namespace {

std::vector<std::vector<std::uint32_t>> partitions(std::uint32_t e) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> current;
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t remaining, std::uint32_t max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(e, e);
  return out;
}

bool is_prime_power(std::uint64_t n) { return n > 1 && factorize(n).size() == 1; }

std::vector<GroupSpec> nonabelian_core_specs(std::uint64_t n) {
  std::vector<GroupSpec> out;
  if (n >= 6 && n % 2 == 0) out.emplace_back(Dihedral{n});
  if (n >= 8 && (n & (n - 1)) == 0) out.emplace_back(GeneralizedQuaternion{n});
  if (is_prime_power(n)) {
    const auto f = factorize(n).front();
    if (f.exponent >= 4 || (f.exponent == 3 && f.prime > 2)) out.emplace_back(Modular{f.prime, f.exponent});
  }
  for (auto& s : semidirect_specs(n)) out.push_back(std::move(s));
  return out;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> abelian_types(std::uint64_t n) {
  std::vector<std::vector<std::uint64_t>> out{{}};
  for (const auto& [p, e] : factorize(n)) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& base : out)
      for (const auto& parts : partitions(e)) {
        // parts is descending; align the largest p-part with the largest factor.
        const std::size_t len = std::max(base.size(), parts.size());
        std::vector<std::uint64_t> merged(len, 1);
        for (std::size_t i = 0; i < base.size(); ++i) merged[len - base.size() + i] = base[i];
        for (std::size_t i = 0; i < parts.size(); ++i) {
          std::uint64_t pk = 1;
          for (std::uint32_t t = 0; t < parts[i]; ++t) pk *= p;
          merged[len - 1 - i] *= pk;
        }
        next.push_back(std::move(merged));
      }
    out = std::move(next);
  }
  if (out.front().empty()) out.front() = {1};
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

GroupSpec abelian_spec(const std::vector<std::uint64_t>& invariants) {
  if (invariants.size() == 1) return Cyclic{invariants.front()};
  return Abelian{invariants};
}

std::vector<GroupSpec> semidirect_specs(std::uint64_t n) {
  std::vector<GroupSpec> out;
  for (std::uint64_t m : divisors(n)) {
    const std::uint64_t k = n / m;
    if (m < 3 || k < 2) continue;
    for (std::uint64_t a = 2; a < m; ++a)
      if (std::gcd(a, m) == 1 && pow_mod(a, k, m) == 1) out.emplace_back(SemidirectCyclic{m, k, a});
  }
  return out;
}

std::vector<GroupSpec> family_specs(std::uint64_t n) {
  std::vector<GroupSpec> out;
  for (const auto& inv : abelian_types(n)) out.push_back(abelian_spec(inv));
  for (auto& s : nonabelian_core_specs(n)) out.push_back(std::move(s));
  for (std::uint64_t d : divisors(n)) {
    const std::uint64_t e = n / d;
    if (d < 2 || e < 6) continue;
    const auto cores = nonabelian_core_specs(e);
    if (cores.empty()) continue;
    for (const auto& inv : abelian_types(d))
      for (const auto& core : cores) out.emplace_back(DirectProduct{{abelian_spec(inv), core}});
  }
  return out;
}

}  // namespace psisum

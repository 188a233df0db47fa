#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psisum/catalog.hpp"
#include "psisum/group.hpp"
#include "psisum/report.hpp"

namespace psisum {

/// n = q^2 k with every prime divisor of k above q; the group (C_q x C_q) x C_k.
struct EqualityWitness {
  std::uint64_t n;
  std::uint64_t q;
  std::uint64_t k;

  GroupSpec spec() const;
  std::string name() const { return to_string(spec()); }

  friend bool operator==(const EqualityWitness&, const EqualityWitness&) = default;
};

/// The witness predicted for order n and least prime q, if n has that shape.
std::optional<EqualityWitness> expected_equality_witness(std::uint64_t n, std::uint64_t q);

struct EqualityClassification {
  std::vector<EqualityWitness> witnesses;
  VerificationReport report;
};

/// psi(G) < psi(C_n) for every non-cyclic class of order n.
VerificationReport verify_max_cyclic(Catalog& catalog, std::uint64_t n);

/// psi(G) <= f(q) psi(C_n); records equality. Throws std::invalid_argument for
/// cyclic G or when q is not the least prime divisor of |G|.
VerificationReport verify_upper_bound(const Group& g, std::uint64_t q, const std::string& witness = {});

/// Which groups of order n attain psi(G) = f(q) psi(C_n). Exhaustive over the
/// catalog when n is within its bound; with `family_restricted` (required past
/// the bound) every group reachable from the construction families is
/// checked instead and the report is labelled accordingly.
EqualityClassification classify_equality(Catalog& catalog, std::uint64_t n, std::uint64_t q,
                                         bool family_restricted = false);

/// Brute-force psi of M_{q^r} and C_q x C_{q^(r-1)} against the closed form,
/// and the closed form strictly below f(q) psi(C_{q^r}). With a catalog that
/// covers q^r, also checks that no non-cyclic class exceeds the closed form.
VerificationReport mqr_formula_check(std::uint64_t q, std::uint32_t r, Catalog* catalog = nullptr);

/// For each class of order n with the second largest psi that is C_m x| C_k
/// with a cyclic Sylow C_m, the index [C_k : C_F(P)] is prime.
VerificationReport lemma7_check(Catalog& catalog, std::uint64_t n);

/// Exact audit of the standalone numeric inequalities used by the upper-bound
/// and equality arguments, over primes q <= q_max, p <= p_max and 1 <= s <= s_max.
VerificationReport proof_inequality_audit(std::uint64_t q_max, std::uint64_t p_max, std::uint32_t s_max);

/// Closed form vs divisor-sum oracle vs brute force, n = 1..n_max.
VerificationReport psi_cyclic_check(std::uint64_t n_max);
/// psi(C_n) >= q n^2 / (p + 1), n = 2..n_max.
VerificationReport cyclic_lower_bound_check(std::uint64_t n_max);
/// psi(A x B) = psi(A) psi(B) for random coprime-order pairs of family groups.
VerificationReport coprime_product_check(std::uint64_t max_order, std::size_t pairs, std::uint64_t seed);
/// psi(C_m x| C_k) <= psi(C_m) psi(C_k), equality exactly for trivial action;
/// all valid (m, k, a), m a prime power coprime to k, m k <= mk_max.
VerificationReport semidirect_bound_check(std::uint64_t mk_max);
/// Strict bound through |C_F(P)| for every non-central (m, k, a) as above.
VerificationReport centralizer_bound_check(std::uint64_t mk_max);
/// f strictly decreasing over primes and integers up to q_max; f(q) < 1.
VerificationReport f_monotonicity_check(std::uint64_t q_max);
/// psi((C_q x C_q) x C_k) against f(q) psi(C_{q^2 k}) for k = 1..k_max, brute
/// force on both sides: equality when every prime divisor of k exceeds q,
/// inequality when q divides k, and when a smaller prime p' divides k a strict
/// inequality against f(p') at the actual least prime of the order.
VerificationReport second_maximal_family_check(std::uint64_t q, std::uint64_t k_max);
/// psi(Q_8) = 27 < (7/11) psi(C_8); with a catalog, Q_8 is maximal among
/// non-cyclic groups of order 8.
VerificationReport q8_comparison(Catalog* catalog = nullptr);
/// psi(G) <= (7/11) psi(C_n) for every non-cyclic class with n <= n_max,
/// equality exactly at (C_2 x C_2) x C_k, k odd.
VerificationReport seven_elevenths_check(Catalog& catalog, std::uint64_t n_max);
/// classify_equality for every order 2..n_max at its least prime, optionally
/// only the orders whose least prime is `q`.
VerificationReport equality_catalog_check(Catalog& catalog, std::uint64_t n_max,
                                          std::optional<std::uint64_t> q = std::nullopt);

}  // namespace psisum

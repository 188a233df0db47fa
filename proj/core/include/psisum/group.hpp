#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "psisum/group_spec.hpp"

namespace psisum {

using Element = std::uint32_t;

/// Multiset of element orders: order d -> number of elements of order d.
using OrderProfile = std::map<std::uint64_t, std::uint64_t>;

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BuildOptions {
  /// Largest group realized as an explicit table; permutation closure stops here.
  std::uint64_t max_order = 4096;
  /// Random associativity triples per element for structured constructions.
  std::uint64_t spot_checks_per_element = 10;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

/// A finite group realized over the indices 0..n-1, identity at 0.
///
/// The multiplication table, inverses and element orders are computed once at
/// construction; a Group is immutable afterwards.
class Group {
 public:
  /// Full validation: square, identity row/column at 0, Latin rows and
  /// columns, and the O(n^3) associativity check.
  static Group from_table(std::size_t n, std::vector<Element> table);

  /// For tables produced by a trusted construction: checks the identity and
  /// Latin property, then `samples` random associativity triples.
  static Group from_trusted_table(std::size_t n, std::vector<Element> table, std::uint64_t samples,
                                  std::uint64_t seed);

  std::size_t order() const { return n_; }
  Element identity() const { return 0; }
  Element multiply(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Element inverse(Element a) const { return inverse_.at(a); }

  /// Least t >= 1 with x^t = identity. Throws std::out_of_range for x >= n.
  std::uint64_t element_order(Element x) const;
  std::span<const std::uint32_t> element_orders() const { return orders_; }

  std::span<const Element> table() const { return table_; }
  std::span<const Element> row(Element a) const {
    return std::span<const Element>(table_).subspan(static_cast<std::size_t>(a) * n_, n_);
  }

 private:
  Group(std::size_t n, std::vector<Element> table);
  void check_latin() const;
  void compute_inverses_and_orders();

  std::size_t n_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint32_t> orders_;
};

Group build_group(const GroupSpec& spec, const BuildOptions& options = {});

std::uint64_t element_order(const Group& g, Element x);
std::uint64_t psi(const Group& g);
OrderProfile order_profile(const Group& g);
bool is_cyclic(const Group& g);
bool is_abelian(const Group& g);

/// Invariant factors d1 | d2 | ... of an abelian group, found by repeatedly
/// splitting off a cyclic subgroup of maximal order. Empty for the trivial
/// group. Throws GroupError when g is not abelian.
std::vector<std::uint64_t> abelian_invariants(const Group& g);

/// Quotient of an abelian group by the cyclic subgroup generated by x.
Group quotient_by_cyclic(const Group& g, Element x);

Group direct_product(const Group& a, const Group& b);

/// |C_F(P)| for SD(m, k, a): k divided by the multiplicative order of a mod m.
std::uint64_t kernel_of_action(std::uint64_t m, std::uint64_t k, std::uint64_t a);

/// Index of the normal form x^i y^j in a realized SD(m, k, a).
inline Element semidirect_element(std::uint64_t m, std::uint64_t i, std::uint64_t j) {
  return static_cast<Element>(i + m * j);
}
/// Indices of the normal cyclic factor C_m inside a realized SD(m, k, a).
std::vector<Element> semidirect_normal_part(std::uint64_t m, std::uint64_t k);
/// Indices of the complement C_k inside a realized SD(m, k, a).
std::vector<Element> semidirect_complement(std::uint64_t m, std::uint64_t k);

/// Number of elements of `within` commuting with every element of `of`.
std::size_t centralizer_size(const Group& g, std::span<const Element> of, std::span<const Element> within);

}  // namespace psisum

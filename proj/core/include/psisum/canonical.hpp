#pragma once

#include <compare>
#include <span>

#include "psisum/cayley_table.hpp"

namespace psisum {

/// The lexicographically least table over all relabelings of 1..n-1 with the
/// identity pinned at 0. Two tables share a canonical form exactly when their
/// groups are isomorphic.
struct CanonicalForm {
  CayleyTable table;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend std::strong_ordering operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Validates t, then minimizes over relabelings. Label 1 only ranges over
/// elements of least non-trivial order; the remaining choices are pruned
/// against the best table found so far. Well under a second up to order 16;
/// past that the cost can grow sharply (about a minute for SD(5,4,2)).
CanonicalForm canonical_form(const CayleyTable& t);
CanonicalForm canonical_form(const Group& g);

/// True when no relabeling of the complete table t is lexicographically smaller.
bool is_canonical(const CayleyTable& t);

bool is_isomorphic(const Group& a, const Group& b);

}  // namespace psisum

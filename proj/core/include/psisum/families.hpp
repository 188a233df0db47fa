#pragma once

#include <cstdint>
#include <vector>

#include "psisum/group_spec.hpp"

namespace psisum {

/// Invariant-factor lists (ascending, d1 | d2 | ...) of every abelian group of
/// order n, one per isomorphism type. {[n]} is always first.
std::vector<std::vector<std::uint64_t>> abelian_types(std::uint64_t n);

/// The canonical spec for an abelian type: Cyclic for a single factor,
/// Abelian otherwise.
GroupSpec abelian_spec(const std::vector<std::uint64_t>& invariants);

/// Every valid SemidirectCyclic(m, k, a) with m * k = n, m >= 3, k >= 2 and a
/// non-trivial action (a != 1 mod m).
std::vector<GroupSpec> semidirect_specs(std::uint64_t n);

/// Specs of order n reachable from the construction families: abelian types,
/// dihedral, generalized quaternion, modular, non-trivial semidirect products
/// of cyclic groups, and direct products of an abelian group with one of the
/// non-abelian families. Ordered from simplest to most composite; isomorphic
/// duplicates are expected.
std::vector<GroupSpec> family_specs(std::uint64_t n);

}  // namespace psisum

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "psisum/cayley_table.hpp"

namespace psisum {

inline constexpr std::uint64_t kDefaultEnumerationBound = 12;
inline constexpr std::uint64_t kEnumerationHardCap = 16;
/// Bumped whenever the generator's output could change; persisted catalogs
/// written by another version are regenerated.
inline constexpr const char* kGeneratorVersion = "orderly-1";

class BoundExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EnumerationOptions {
  std::uint64_t bound = kDefaultEnumerationBound;
  /// Worker threads for the subtree search; 0 picks hardware concurrency.
  unsigned threads = 0;
  /// Receives the slow-order warning; defaults to std::clog.
  std::function<void(const std::string&)> warn;
};

/// Throws BoundExceeded when n exceeds options.bound or the bound exceeds the
/// hard cap; emits a warning for orders past the default bound.
void check_enumeration_order(std::uint64_t n, const EnumerationOptions& options);

/// One Cayley table per isomorphism class of groups of order n, each the
/// lexicographically least relabeling of its class.
///
/// Orderly generation: cells are filled in row-major order under the Latin
/// constraint, every assignment is pushed through the associativity
/// constraints (forcing cells where three of four entries are known), and a
/// partial table is abandoned as soon as a relabeling is smaller on its
/// filled prefix. Subtrees below the first free cell run independently.
///
/// Output is sorted by descending psi, ties broken by table order, so the
/// cyclic group comes first.
std::vector<CayleyTable> all_groups(std::uint64_t n, const EnumerationOptions& options = {});

}  // namespace psisum

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace psisum {

struct GroupSpec;

/// C_n.
struct Cyclic {
  std::uint64_t n;
};

/// C_{d1} x ... x C_{dr} with d1 | d2 | ... | dr.
struct Abelian {
  std::vector<std::uint64_t> invariants;
};

struct DirectProduct {
  std::vector<GroupSpec> factors;
};

/// C_m x| C_k where the C_k generator acts on C_m by x -> x^a.
struct SemidirectCyclic {
  std::uint64_t m;
  std::uint64_t k;
  std::uint64_t a;
};

/// Dihedral group of the given order (2n, symmetries of an n-gon).
struct Dihedral {
  std::uint64_t order;
};

/// Generalized quaternion group of order 2^m, m >= 3.
struct GeneralizedQuaternion {
  std::uint64_t order;
};

/// M_{q^r} = <a, b | a^(q^(r-1)) = b^q = 1, b^-1 a b = a^(q^(r-2) + 1)>.
struct Modular {
  std::uint64_t q;
  std::uint32_t r;
};

/// Explicit multiplication table with the identity at index 0.
struct FromCayleyTable {
  std::vector<std::vector<std::uint32_t>> rows;
  std::string source;  // file path the table was read from, if any
};

/// Closure of permutations of {0, ..., degree-1}.
struct FromPermutations {
  std::size_t degree;
  std::vector<std::vector<std::uint32_t>> generators;
  std::string source;
};

struct GroupSpec {
  using Node = std::variant<Cyclic, Abelian, DirectProduct, SemidirectCyclic, Dihedral,
                            GeneralizedQuaternion, Modular, FromCayleyTable, FromPermutations>;
  Node node;

  GroupSpec() : node(Cyclic{1}) {}
  template <typename T>
    requires std::is_constructible_v<Node, T&&> && (!std::is_same_v<std::decay_t<T>, GroupSpec>)
  GroupSpec(T&& value) : node(std::forward<T>(value)) {}  // NOLINT(google-explicit-constructor)

  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&node);
  }
};

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws SpecError when a structural invariant fails (bad divisibility
/// chain, invalid semidirect action, Modular outside its domain, ...).
void validate(const GroupSpec& spec);

/// Order implied by the spec; nullopt for FromPermutations (known only after
/// closure).
std::optional<std::uint64_t> declared_order(const GroupSpec& spec);

/// Text form: C12, A[2,6], D8, Q8, M(2,4), SD(5,4,2), products joined by 'x',
/// table:<path>, perm:<path>.
std::string to_string(const GroupSpec& spec);

/// Parses the text form. table: and perm: read their JSON files.
GroupSpec parse_group_spec(std::string_view text);

/// Reads a JSON array-of-arrays of element indices.
FromCayleyTable load_table_file(const std::string& path);
/// Reads a JSON list of permutations in one-line notation (0- or 1-based).
FromPermutations load_permutation_file(const std::string& path);

}  // namespace psisum

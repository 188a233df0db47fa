#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "psisum/group.hpp"

namespace psisum {

/// n x n multiplication table over 0..n-1, identity at index 0, row-major.
class CayleyTable {
 public:
  CayleyTable() = default;
  CayleyTable(std::size_t n, std::vector<Element> cells);

  static CayleyTable from_group(const Group& g);
  static CayleyTable from_rows(const std::vector<std::vector<std::uint32_t>>& rows);

  std::size_t order() const { return n_; }
  Element at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  std::span<const Element> cells() const { return cells_; }
  std::vector<std::vector<std::uint32_t>> rows() const;

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;
  friend std::strong_ordering operator<=>(const CayleyTable& a, const CayleyTable& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.cells_ <=> b.cells_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Element> cells_;
};

/// Full group-axiom validation; throws GroupError.
void validate_table(const CayleyTable& t);

/// Realizes the table as a Group (with full validation).
Group to_group(const CayleyTable& t);

/// Table of the same group with element x renamed to perm[x]; perm[0] must be 0.
CayleyTable relabel(const CayleyTable& t, std::span<const Element> perm);

}  // namespace psisum

#include "psisum/cayley_table.hpp"

#include <stdexcept>

namespace psisum {

CayleyTable::CayleyTable(std::size_t n, std::vector<Element> cells) : n_(n), cells_(std::move(cells)) {
  if (cells_.size() != n_ * n_) throw GroupError("CayleyTable: expected n*n cells");
}

CayleyTable CayleyTable::from_group(const Group& g) {
  const auto t = g.table();
  return CayleyTable(g.order(), std::vector<Element>(t.begin(), t.end()));
}

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<std::uint32_t>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Element> cells;
  cells.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw GroupError("CayleyTable: rows must have length n");
    cells.insert(cells.end(), r.begin(), r.end());
  }
  return CayleyTable(n, std::move(cells));
}

std::vector<std::vector<std::uint32_t>> CayleyTable::rows() const {
  std::vector<std::vector<std::uint32_t>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i].assign(cells_.begin() + i * n_, cells_.begin() + (i + 1) * n_);
  return out;
}

void validate_table(const CayleyTable& t) { (void)to_group(t); }

Group to_group(const CayleyTable& t) {
  const auto c = t.cells();
  return Group::from_table(t.order(), std::vector<Element>(c.begin(), c.end()));
}

CayleyTable relabel(const CayleyTable& t, std::span<const Element> perm) {
  const std::size_t n = t.order();
  if (perm.size() != n || (n > 0 && perm[0] != 0))
    throw std::invalid_argument("relabel: permutation must fix the identity");
  std::vector<Element> cells(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cells[perm[i] * n + perm[j]] = perm[t.at(i, j)];
  return CayleyTable(n, std::move(cells));
}

}  // namespace psisum

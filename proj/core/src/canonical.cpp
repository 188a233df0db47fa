#include "psisum/canonical.hpp"

#include "relabel_search.hpp"

namespace psisum {

namespace {

CanonicalForm minimize(const Group& g) {
  const auto cells = g.table();
  const auto orders = g.element_orders();
  const std::vector<std::uint32_t> order_vec(orders.begin(), orders.end());
  detail::MinimalRelabelingSearch search(g.order(), cells.data(), order_vec);
  return CanonicalForm{CayleyTable(g.order(), search.run())};
}

}  // namespace

CanonicalForm canonical_form(const CayleyTable& t) { return minimize(to_group(t)); }

CanonicalForm canonical_form(const Group& g) { return minimize(g); }

bool is_canonical(const CayleyTable& t) {
  const auto cells = t.cells();
  detail::SmallerRelabelingSearch<Element> search(t.order(), cells.data(), detail::kNone);
  return !search.found();
}

bool is_isomorphic(const Group& a, const Group& b) {
  if (a.order() != b.order()) return false;
  if (order_profile(a) != order_profile(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace psisum

#include "psisum/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "psisum/primes.hpp"

namespace psisum {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_budget(std::uint64_t n, const BuildOptions& options) {
  if (n > options.max_order)
    throw GroupError("group of order " + std::to_string(n) + " exceeds the element budget of " +
                     std::to_string(options.max_order));
}

Group trusted(std::size_t n, std::vector<Element> table, const BuildOptions& options) {
  return Group::from_trusted_table(n, std::move(table), options.spot_checks_per_element * n, options.seed);
}

Group cyclic_group(std::uint64_t n, const BuildOptions& options) {
  require_budget(n, options);
  std::vector<Element> t(n * n);
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j) t[i * n + j] = static_cast<Element>((i + j) % n);
  return trusted(n, std::move(t), options);
}

// Normal form x^i y^j stored at i + m*j; y x y^-1 = x^a.
Group semidirect_group(std::uint64_t m, std::uint64_t k, std::uint64_t a, const BuildOptions& options) {
  validate(SemidirectCyclic{m, k, a});
  const std::uint64_t n = m * k;
  require_budget(n, options);
  std::vector<std::uint64_t> apow(k);
  apow[0] = 1 % m;
  for (std::uint64_t j = 1; j < k; ++j) apow[j] = apow[j - 1] * (a % m) % m;
  std::vector<Element> t(n * n);
  for (std::uint64_t j1 = 0; j1 < k; ++j1)
    for (std::uint64_t i1 = 0; i1 < m; ++i1)
      for (std::uint64_t j2 = 0; j2 < k; ++j2)
        for (std::uint64_t i2 = 0; i2 < m; ++i2) {
          const std::uint64_t i = (i1 + apow[j1] * i2) % m;
          const std::uint64_t j = (j1 + j2) % k;
          t[(i1 + m * j1) * n + (i2 + m * j2)] = semidirect_element(m, i, j);
        }
  return trusted(n, std::move(t), options);
}

// Normal form x^i y^j (j in {0,1}) stored at i + N*j with x of order N = n/2,
// y^2 = x^(N/2) and y x y^-1 = x^-1.
Group quaternion_group(std::uint64_t order, const BuildOptions& options) {
  validate(GeneralizedQuaternion{order});
  require_budget(order, options);
  const std::uint64_t half = order / 2;
  std::vector<Element> t(order * order);
  for (std::uint64_t j1 = 0; j1 < 2; ++j1)
    for (std::uint64_t i1 = 0; i1 < half; ++i1)
      for (std::uint64_t j2 = 0; j2 < 2; ++j2)
        for (std::uint64_t i2 = 0; i2 < half; ++i2) {
          std::uint64_t i = 0, j = 0;
          if (j1 == 0) {
            i = (i1 + i2) % half;
            j = j2;
          } else if (j2 == 0) {
            i = (i1 + half - i2) % half;
            j = 1;
          } else {
            i = (i1 + half - i2 + half / 2) % half;
            j = 0;
          }
          t[(i1 + half * j1) * order + (i2 + half * j2)] = static_cast<Element>(i + half * j);
        }
  return trusted(order, std::move(t), options);
}

Group permutation_group(const FromPermutations& spec, const BuildOptions& options) {
  using Perm = std::vector<std::uint32_t>;
  Perm id(spec.degree);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Perm> elements{id};
  std::map<Perm, Element> index{{id, 0}};
  const std::size_t gens = spec.generators.size();
  // right[x * gens + g] = index of x * generator g (apply x, then g).
  std::vector<Element> right;
  for (std::size_t x = 0; x < elements.size(); ++x) {
    for (const auto& g : spec.generators) {
      Perm p(spec.degree);
      for (std::size_t i = 0; i < spec.degree; ++i) p[i] = g[elements[x][i]];
      auto [it, inserted] = index.try_emplace(p, static_cast<Element>(elements.size()));
      if (inserted) {
        if (elements.size() + 1 > options.max_order)
          throw GroupError("permutation closure exceeds the element budget of " +
                           std::to_string(options.max_order));
        elements.push_back(std::move(p));
      }
      right.push_back(it->second);
    }
  }
  const std::size_t n = elements.size();
  // Every non-identity y was first reached as parent * generator; expand
  // x * y = (x * parent) * generator in discovery order.
  std::vector<Element> parent(n, 0), via(n, 0);
  std::vector<bool> reached(n, false);
  reached[0] = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t g = 0; g < gens; ++g) {
      const Element y = right[x * gens + g];
      if (!reached[y]) {
        reached[y] = true;
        parent[y] = static_cast<Element>(x);
        via[y] = static_cast<Element>(g);
      }
    }
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    t[x * n] = static_cast<Element>(x);
    for (std::size_t y = 1; y < n; ++y) t[x * n + y] = right[t[x * n + parent[y]] * gens + via[y]];
  }
  return trusted(n, std::move(t), options);
}

}  // namespace

Group::Group(std::size_t n, std::vector<Element> table) : n_(n), table_(std::move(table)) {
  if (n_ == 0) throw GroupError("a group needs at least one element");
  if (table_.size() != n_ * n_) throw GroupError("multiplication table is not n x n");
}

void Group::check_latin() const {
  for (std::size_t j = 0; j < n_; ++j)
    if (table_[j] != j || table_[j * n_] != j) throw GroupError("index 0 is not the identity");
  std::vector<std::uint32_t> row_seen(n_, UINT32_MAX), col_seen(n_, UINT32_MAX);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const Element r = table_[i * n_ + j];
      const Element c = table_[j * n_ + i];
      if (r >= n_ || c >= n_) throw GroupError("table entry out of range");
      if (row_seen[r] == i) throw GroupError("row " + std::to_string(i) + " is not a bijection");
      if (col_seen[c] == i) throw GroupError("column " + std::to_string(i) + " is not a bijection");
      row_seen[r] = col_seen[c] = static_cast<std::uint32_t>(i);
    }
  }
}

void Group::compute_inverses_and_orders() {
  inverse_.assign(n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (table_[i * n_ + j] == 0) {
        inverse_[i] = static_cast<Element>(j);
        break;
      }
  orders_.assign(n_, 0);
  for (std::size_t x = 0; x < n_; ++x) {
    // Iterated multiplication, capped at n steps.
    Element y = static_cast<Element>(x);
    std::uint32_t t = 1;
    while (y != 0) {
      y = multiply(y, static_cast<Element>(x));
      if (++t > n_) throw GroupError("element " + std::to_string(x) + " has no finite order within n");
    }
    if (n_ % t != 0) throw std::logic_error("element order does not divide the group order");
    orders_[x] = t;
  }
}

Group Group::from_table(std::size_t n, std::vector<Element> table) {
  Group g(n, std::move(table));
  g.check_latin();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Element ab = g.multiply(static_cast<Element>(a), static_cast<Element>(b));
      for (std::size_t c = 0; c < n; ++c)
        if (g.multiply(ab, static_cast<Element>(c)) !=
            g.multiply(static_cast<Element>(a), g.multiply(static_cast<Element>(b), static_cast<Element>(c))))
          throw GroupError("table is not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + ")");
    }
  g.compute_inverses_and_orders();
  return g;
}

Group Group::from_trusted_table(std::size_t n, std::vector<Element> table, std::uint64_t samples,
                                std::uint64_t seed) {
  Group g(n, std::move(table));
  g.check_latin();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Element a = pick(rng), b = pick(rng), c = pick(rng);
    if (g.multiply(g.multiply(a, b), c) != g.multiply(a, g.multiply(b, c)))
      throw std::logic_error("constructed table failed an associativity spot check");
  }
  g.compute_inverses_and_orders();
  return g;
}

std::uint64_t Group::element_order(Element x) const {
  if (x >= n_)
    throw std::out_of_range("element " + std::to_string(x) + " out of range for order " + std::to_string(n_));
  return orders_[x];
}

Group direct_product(const Group& a, const Group& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Element> t(n * n);
  // (x1, x2) stored at x1 + na * x2.
  for (std::size_t y1 = 0; y1 < nb; ++y1)
    for (std::size_t x1 = 0; x1 < na; ++x1)
      for (std::size_t y2 = 0; y2 < nb; ++y2)
        for (std::size_t x2 = 0; x2 < na; ++x2)
          t[(x1 + na * y1) * n + (x2 + na * y2)] =
              static_cast<Element>(a.multiply(static_cast<Element>(x1), static_cast<Element>(x2)) +
                                   na * b.multiply(static_cast<Element>(y1), static_cast<Element>(y2)));
  return Group::from_trusted_table(n, std::move(t), 10 * n, 0x51ed27);
}

Group build_group(const GroupSpec& spec, const BuildOptions& options) {
  validate(spec);
  if (auto n = declared_order(spec)) require_budget(*n, options);
  return std::visit(
      overloaded{
          [&](const Cyclic& c) { return cyclic_group(c.n, options); },
          [&](const Abelian& a) {
            Group g = cyclic_group(a.invariants.front(), options);
            for (std::size_t i = 1; i < a.invariants.size(); ++i)
              g = direct_product(g, cyclic_group(a.invariants[i], options));
            return g;
          },
          [&](const DirectProduct& d) {
            Group g = build_group(d.factors.front(), options);
            for (std::size_t i = 1; i < d.factors.size(); ++i)
              g = direct_product(g, build_group(d.factors[i], options));
            return g;
          },
          [&](const SemidirectCyclic& s) { return semidirect_group(s.m, s.k, s.a, options); },
          [&](const Dihedral& d) {
            const std::uint64_t half = d.order / 2;
            return semidirect_group(half, 2, half - 1, options);
          },
          [&](const GeneralizedQuaternion& q) { return quaternion_group(q.order, options); },
          [&](const Modular& md) {
            std::uint64_t m = 1, twist = 1;
            for (std::uint32_t i = 0; i + 1 < md.r; ++i) m *= md.q;
            for (std::uint32_t i = 0; i + 2 < md.r; ++i) twist *= md.q;
            // b^-1 a b = a^(1 + q^(r-2)) means b a b^-1 = a^s with s the inverse.
            return semidirect_group(m, md.q, inverse_mod(1 + twist, m), options);
          },
          [&](const FromCayleyTable& t) {
            const std::size_t n = t.rows.size();
            std::vector<Element> flat;
            flat.reserve(n * n);
            for (const auto& row : t.rows) flat.insert(flat.end(), row.begin(), row.end());
            return Group::from_table(n, std::move(flat));
          },
          [&](const FromPermutations& p) { return permutation_group(p, options); },
      },
      spec.node);
}

std::uint64_t element_order(const Group& g, Element x) { return g.element_order(x); }

std::uint64_t psi(const Group& g) {
  std::uint64_t sum = 0;
  for (auto o : g.element_orders()) sum += o;
  return sum;
}

OrderProfile order_profile(const Group& g) {
  OrderProfile profile;
  for (auto o : g.element_orders()) ++profile[o];
  return profile;
}

bool is_cyclic(const Group& g) {
  const auto orders = g.element_orders();
  return std::any_of(orders.begin(), orders.end(), [&](auto o) { return o == g.order(); });
}

bool is_abelian(const Group& g) {
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (g.multiply(static_cast<Element>(a), static_cast<Element>(b)) !=
          g.multiply(static_cast<Element>(b), static_cast<Element>(a)))
        return false;
  return true;
}

Group quotient_by_cyclic(const Group& g, Element x) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> coset(n, UINT32_MAX);
  std::vector<Element> reps;
  for (std::size_t e = 0; e < n; ++e) {
    if (coset[e] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(static_cast<Element>(e));
    Element y = static_cast<Element>(e);
    do {
      coset[y] = id;
      y = g.multiply(y, x);
    } while (y != e);
  }
  const std::size_t m = reps.size();
  std::vector<Element> t(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t[i * m + j] = coset[g.multiply(reps[i], reps[j])];
  return Group::from_trusted_table(m, std::move(t), 10 * m, 0x0fac7);
}

std::vector<std::uint64_t> abelian_invariants(const Group& g) {
  if (!is_abelian(g)) throw GroupError("abelian_invariants: group is not abelian");
  std::vector<std::uint64_t> factors;
  Group current = g;
  while (current.order() > 1) {
    const auto orders = current.element_orders();
    const auto it = std::max_element(orders.begin(), orders.end());
    factors.push_back(*it);
    current = quotient_by_cyclic(current, static_cast<Element>(it - orders.begin()));
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

std::uint64_t kernel_of_action(std::uint64_t m, std::uint64_t k, std::uint64_t a) {
  validate(SemidirectCyclic{m, k, a});
  return k / multiplicative_order(a % m, m);
}

std::vector<Element> semidirect_normal_part(std::uint64_t m, std::uint64_t /*k*/) {
  std::vector<Element> out(m);
  for (std::uint64_t i = 0; i < m; ++i) out[i] = semidirect_element(m, i, 0);
  return out;
}

std::vector<Element> semidirect_complement(std::uint64_t m, std::uint64_t k) {
  std::vector<Element> out(k);
  for (std::uint64_t j = 0; j < k; ++j) out[j] = semidirect_element(m, 0, j);
  return out;
}

std::size_t centralizer_size(const Group& g, std::span<const Element> of, std::span<const Element> within) {
  return static_cast<std::size_t>(std::count_if(within.begin(), within.end(), [&](Element w) {
    return std::all_of(of.begin(), of.end(), [&](Element p) { return g.multiply(w, p) == g.multiply(p, w); });
  }));
}

}  // namespace psisum

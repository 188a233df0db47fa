#include "psisum/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <iostream>
#include <mutex>
#include <thread>

#include "relabel_search.hpp"

namespace psisum {

namespace {

constexpr std::size_t kMax = kEnumerationHardCap;
constexpr std::uint8_t kUnknown = 0xFF;

class OrderlyGenerator {
 public:
  explicit OrderlyGenerator(std::size_t n) : n_(n), full_mask_(n >= 32 ? ~0u : (1u << n) - 1) {
    t_.fill(kUnknown);
    row_pos_.fill(kUnknown);
    row_used_.fill(0);
    col_used_.fill(0);
    for (std::size_t k = 0; k < n_; ++k) {
      assign(0, k, static_cast<std::uint8_t>(k));
      assign(k, 0, static_cast<std::uint8_t>(k));
    }
    consistent_ = propagate();
  }

  /// Legal values of the first free cell, one search subtree each.
  std::vector<std::uint8_t> subtree_roots() const {
    std::vector<std::uint8_t> roots;
    const std::size_t idx = first_unknown(0);
    if (!consistent_ || idx == n_ * n_) return roots;
    std::uint32_t avail = ~(row_used_[idx / n_] | col_used_[idx % n_]) & full_mask_;
    for (; avail; avail &= avail - 1) roots.push_back(static_cast<std::uint8_t>(std::countr_zero(avail)));
    return roots;
  }

  /// Runs the whole search (when root is nullopt-like kUnknown) or one subtree.
  void run(std::uint8_t root, std::vector<CayleyTable>& out) {
    out_ = &out;
    if (!consistent_) return;
    const std::size_t idx = first_unknown(0);
    if (idx == n_ * n_) {
      emit();
      return;
    }
    if (root == kUnknown) {
      dfs(idx);
      return;
    }
    try_value(idx, root);
  }

 private:
  std::size_t first_unknown(std::size_t from) const {
    while (from < n_ * n_ && t_[from] != kUnknown) ++from;
    return from;
  }

  void dfs(std::size_t from) {
    const std::size_t idx = first_unknown(from);
    if (idx == n_ * n_) {
      if (!has_smaller()) emit();
      return;
    }
    std::uint32_t avail = ~(row_used_[idx / n_] | col_used_[idx % n_]) & full_mask_;
    for (; avail; avail &= avail - 1) try_value(idx, static_cast<std::uint8_t>(std::countr_zero(avail)));
  }

  void try_value(std::size_t idx, std::uint8_t v) {
    const std::size_t mark = trail_.size();
    if (assign(idx / n_, idx % n_, v) && propagate() && !has_smaller()) dfs(idx + 1);
    undo(mark);
  }

  bool has_smaller() const {
    detail::SmallerRelabelingSearch<std::uint8_t> search(n_, t_.data(), kUnknown);
    return search.found();
  }

  void emit() {
    std::vector<Element> cells(n_ * n_);
    for (std::size_t k = 0; k < n_ * n_; ++k) cells[k] = t_[k];
    out_->emplace_back(n_, std::move(cells));
  }

  bool assign(std::size_t a, std::size_t b, std::uint8_t v) {
    const std::size_t idx = a * n_ + b;
    if (t_[idx] == v) return true;
    if (t_[idx] != kUnknown) return false;
    const std::uint32_t bit = 1u << v;
    if ((row_used_[a] & bit) || (col_used_[b] & bit)) return false;
    t_[idx] = v;
    row_used_[a] |= bit;
    col_used_[b] |= bit;
    row_pos_[a * kMax + v] = static_cast<std::uint8_t>(b);
    trail_.push_back(static_cast<std::uint16_t>(idx));
    queue_.push_back(static_cast<std::uint16_t>(idx));
    return true;
  }

  void undo(std::size_t mark) {
    queue_.clear();
    while (trail_.size() > mark) {
      const std::size_t idx = trail_.back();
      trail_.pop_back();
      const std::size_t a = idx / n_, b = idx % n_;
      const std::uint8_t v = t_[idx];
      row_used_[a] &= ~(1u << v);
      col_used_[b] &= ~(1u << v);
      row_pos_[a * kMax + v] = kUnknown;
      t_[idx] = kUnknown;
    }
  }

  std::uint8_t at(std::size_t a, std::size_t b) const { return t_[a * n_ + b]; }

  // Each newly fixed cell c = a*b takes part in four associativity roles;
  // whenever three entries of an instance are known the fourth is forced.
  bool propagate() {
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const std::size_t idx = queue_[qi];
      const std::size_t a = idx / n_, b = idx % n_;
      const std::uint8_t c = t_[idx];
      for (std::size_t z = 0; z < n_; ++z) {  // (a b) z = a (b z)
        const std::uint8_t w = at(b, z);
        if (w == kUnknown) continue;
        const std::uint8_t lhs = at(c, z), rhs = at(a, w);
        if (lhs != kUnknown) {
          if (!assign(a, w, lhs)) return fail();
        } else if (rhs != kUnknown) {
          if (!assign(c, z, rhs)) return fail();
        }
      }
      for (std::size_t x = 0; x < n_; ++x) {  // (x a) b = x (a b)
        const std::uint8_t u = at(x, a);
        if (u == kUnknown) continue;
        const std::uint8_t lhs = at(u, b), rhs = at(x, c);
        if (lhs != kUnknown) {
          if (!assign(x, c, lhs)) return fail();
        } else if (rhs != kUnknown) {
          if (!assign(u, b, rhs)) return fail();
        }
      }
      for (std::size_t x = 0; x < n_; ++x) {  // x y = a  =>  x (y b) = c
        const std::uint8_t y = row_pos_[x * kMax + a];
        if (y == kUnknown) continue;
        const std::uint8_t w = at(y, b);
        if (w != kUnknown && !assign(x, w, c)) return fail();
      }
      for (std::size_t y = 0; y < n_; ++y) {  // y z = b  =>  (a y) z = c
        const std::uint8_t z = row_pos_[y * kMax + b];
        if (z == kUnknown) continue;
        const std::uint8_t u = at(a, y);
        if (u != kUnknown && !assign(u, z, c)) return fail();
      }
    }
    queue_.clear();
    return true;
  }

  bool fail() {
    queue_.clear();
    return false;
  }

  std::size_t n_;
  std::uint32_t full_mask_;
  bool consistent_ = true;
  std::array<std::uint8_t, kMax * kMax> t_{};
  std::array<std::uint8_t, kMax * kMax> row_pos_{};
  std::array<std::uint32_t, kMax> row_used_{};
  std::array<std::uint32_t, kMax> col_used_{};
  std::vector<std::uint16_t> trail_;
  std::vector<std::uint16_t> queue_;
  std::vector<CayleyTable>* out_ = nullptr;
};

}  // namespace

void check_enumeration_order(std::uint64_t n, const EnumerationOptions& options) {
  if (options.bound > kEnumerationHardCap)
    throw BoundExceeded("enumeration bound " + std::to_string(options.bound) + " exceeds the hard cap of " +
                        std::to_string(kEnumerationHardCap));
  if (n == 0) throw BoundExceeded("group order must be positive");
  if (n > options.bound)
    throw BoundExceeded("order " + std::to_string(n) + " exceeds the enumeration bound of " +
                        std::to_string(options.bound));
  if (n > kDefaultEnumerationBound) {
    const std::string msg = "warning: enumerating groups of order " + std::to_string(n) +
                            " is past the default bound of " + std::to_string(kDefaultEnumerationBound) +
                            " and may take a long time";
    if (options.warn)
      options.warn(msg);
    else
      std::clog << msg << '\n';
  }
}

std::vector<CayleyTable> all_groups(std::uint64_t n, const EnumerationOptions& options) {
  check_enumeration_order(n, options);

  const OrderlyGenerator seed(n);
  const auto roots = seed.subtree_roots();
  std::vector<CayleyTable> found;
  if (roots.empty()) {
    OrderlyGenerator(seed).run(kUnknown, found);
  } else {
    std::vector<std::vector<CayleyTable>> per_root(roots.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t r; (r = next.fetch_add(1)) < roots.size();) OrderlyGenerator(seed).run(roots[r], per_root[r]);
    };
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(roots.size()));
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    }
    for (auto& part : per_root)
      for (auto& t : part) found.push_back(std::move(t));
  }

  std::vector<std::pair<std::uint64_t, CayleyTable>> keyed;
  keyed.reserve(found.size());
  for (auto& t : found) {
    const Group g = to_group(t);  // full axiom check on every output
    keyed.emplace_back(psi(g), std::move(t));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return x.second < y.second;
  });
  std::vector<CayleyTable> out;
  out.reserve(keyed.size());
  for (auto& [p, t] : keyed) out.push_back(std::move(t));
  return out;
}

}  // namespace psisum

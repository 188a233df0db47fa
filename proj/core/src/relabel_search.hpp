#pragma once

// Searches over identity-fixing relabelings of a Cayley table, shared by the
// canonical form and by the orderly generator's canonicity test.
//
// A relabeling is built greedily in row-major order of the relabeled table:
// the element written as label 1 is chosen freely, every product that is not
// labeled yet receives the next free label (any other label would make that
// cell larger), and a column whose label is still unbound is bound to a
// freely chosen element. All free choices happen inside row 1.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace psisum::detail {

inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

class LabelState {
 public:
  explicit LabelState(std::size_t n) : label_of_(n, kNone), elem_of_(n, kNone) {
    if (n > 0) {
      label_of_[0] = elem_of_[0] = 0;
      next_free_ = 1;
    }
  }

  std::uint32_t label_of(std::size_t e) const { return label_of_[e]; }
  std::uint32_t elem_of(std::size_t l) const { return elem_of_[l]; }
  std::uint32_t next_free() const { return next_free_; }
  std::size_t mark() const { return trail_.size(); }

  void bind(std::uint32_t elem, std::uint32_t label) {
    label_of_[elem] = label;
    elem_of_[label] = elem;
    ++next_free_;
    trail_.push_back(elem);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const std::uint32_t e = trail_.back();
      trail_.pop_back();
      elem_of_[label_of_[e]] = kNone;
      label_of_[e] = kNone;
      --next_free_;
    }
  }

 private:
  std::vector<std::uint32_t> label_of_;
  std::vector<std::uint32_t> elem_of_;
  std::vector<std::uint32_t> trail_;
  std::uint32_t next_free_ = 0;
};

/// True when some relabeling makes the table lexicographically smaller on the
/// prefix of cells known on both sides. `unknown` marks unfilled cells; with a
/// complete table this is the exact "not lexicographically minimal" test.
template <class Cell>
class SmallerRelabelingSearch {
 public:
  SmallerRelabelingSearch(std::size_t n, const Cell* cells, Cell unknown)
      : n_(n), t_(cells), unknown_(unknown), labels_(n) {}

  bool found() { return n_ > 1 && step(1, 1); }

 private:
  bool step(std::size_t i, std::size_t j) {
    const std::size_t mark = labels_.mark();
    bool result = false;
    for (;; ++j) {
      if (j == n_) {
        j = 1;
        if (++i == n_) break;
      }
      const Cell target = t_[i * n_ + j];
      if (target == unknown_) break;
      if (labels_.elem_of(i) == kNone) {
        result = branch(static_cast<std::uint32_t>(i), i, j);
        break;
      }
      if (labels_.elem_of(j) == kNone) {
        result = branch(static_cast<std::uint32_t>(j), i, j);
        break;
      }
      const Cell p = t_[labels_.elem_of(i) * n_ + labels_.elem_of(j)];
      if (p == unknown_) break;
      std::uint32_t v = labels_.label_of(p);
      if (v == kNone) {
        v = labels_.next_free();
        labels_.bind(p, v);
      }
      if (v < target) {
        result = true;
        break;
      }
      if (v > target) break;
    }
    labels_.undo(mark);
    return result;
  }

  bool branch(std::uint32_t label, std::size_t i, std::size_t j) {
    for (std::uint32_t c = 1; c < n_; ++c) {
      if (labels_.label_of(c) != kNone) continue;
      const std::size_t mark = labels_.mark();
      labels_.bind(c, label);
      const bool r = step(i, j);
      labels_.undo(mark);
      if (r) return true;
    }
    return false;
  }

  std::size_t n_;
  const Cell* t_;
  Cell unknown_;
  LabelState labels_;
};

/// Lexicographically minimal relabeled table of a complete group table.
/// Label 1 is restricted to elements of least non-trivial order: row 1 of the
/// relabeled table begins 2, 3, ..., d-1, 0 for an element of order d, so a
/// smaller order always gives a smaller table.
class MinimalRelabelingSearch {
 public:
  MinimalRelabelingSearch(std::size_t n, const std::uint32_t* cells, const std::vector<std::uint32_t>& orders)
      : n_(n), t_(cells), orders_(orders), labels_(n), cur_(n * n, 0) {
    for (std::size_t k = 0; k < n_; ++k) cur_[k] = cur_[k * n_] = static_cast<std::uint32_t>(k);
  }

  std::vector<std::uint32_t> run() {
    if (n_ <= 1) return cur_;
    std::uint32_t least = kNone;
    for (std::size_t e = 1; e < n_; ++e) least = std::min(least, orders_[e]);
    least_order_ = least;
    step(1, 1, true);
    return best_;
  }

 private:
  void step(std::size_t i, std::size_t j, bool less) {
    const std::size_t mark = labels_.mark();
    for (;; ++j) {
      if (j == n_) {
        j = 1;
        if (++i == n_) {
          if (less || best_.empty()) best_ = cur_;
          break;
        }
      }
      if (labels_.elem_of(i) == kNone) {
        branch(static_cast<std::uint32_t>(i), i, j, less);
        break;
      }
      if (labels_.elem_of(j) == kNone) {
        branch(static_cast<std::uint32_t>(j), i, j, less);
        break;
      }
      const std::uint32_t p = t_[labels_.elem_of(i) * n_ + labels_.elem_of(j)];
      std::uint32_t v = labels_.label_of(p);
      if (v == kNone) {
        v = labels_.next_free();
        labels_.bind(p, v);
      }
      cur_[i * n_ + j] = v;
      if (!less) {
        const std::uint32_t b = best_[i * n_ + j];
        if (v > b) break;
        if (v < b) less = true;
      }
    }
    labels_.undo(mark);
  }

  void branch(std::uint32_t label, std::size_t i, std::size_t j, bool less) {
    for (std::uint32_t c = 1; c < n_; ++c) {
      if (labels_.label_of(c) != kNone) continue;
      if (label == 1 && orders_[c] != least_order_) continue;
      const std::size_t mark = labels_.mark();
      labels_.bind(c, label);
      step(i, j, less);
      labels_.undo(mark);
      // Any completed child leaves best_ sharing this prefix.
      less = false;
    }
  }

  std::size_t n_;
  const std::uint32_t* t_;
  const std::vector<std::uint32_t>& orders_;
  std::uint32_t least_order_ = 0;
  LabelState labels_;
  std::vector<std::uint32_t> cur_;
  std::vector<std::uint32_t> best_;
};

}  // namespace psisum::detail

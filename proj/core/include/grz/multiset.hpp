#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "grz/formula.hpp"

namespace grz {

// Finite multiset of formulas with value semantics.  Entries are kept sorted
// in the canonical formula order with strictly positive multiplicities, so
// operator== is multiset equality and iteration order is deterministic.
class FormulaMultiset {
public:
  using Item = std::pair<FormulaRef, int>;

  FormulaMultiset() = default;
  FormulaMultiset(std::initializer_list<FormulaRef> fs);

  static FormulaMultiset single(FormulaRef f);

  int count(FormulaRef f) const;
  bool contains(FormulaRef f) const { return count(f) > 0; }
  int total() const;                                  // sum of multiplicities
  int distinct() const { return static_cast<int>(items_.size()); }
  bool empty() const { return items_.empty(); }

  FormulaMultiset plus(FormulaRef f, int n = 1) const;
  FormulaMultiset minus(FormulaRef f, int n = 1) const;  // error when absent
  FormulaMultiset plus(const FormulaMultiset& other) const;
  FormulaMultiset minus(const FormulaMultiset& other) const;  // error unless other <= *this
  FormulaMultiset diff_truncated(const FormulaMultiset& other) const;
  FormulaMultiset union_max(const FormulaMultiset& other) const;
  FormulaMultiset intersect_min(const FormulaMultiset& other) const;

  bool submultiset_of(const FormulaMultiset& other) const;
  bool all_boxed() const;

  const std::vector<Item>& items() const { return items_; }
  std::vector<FormulaRef> expanded() const;  // one entry per copy

  bool operator==(const FormulaMultiset&) const = default;
  std::size_t hash() const;

private:
  std::vector<Item> items_;
};

}  // namespace grz

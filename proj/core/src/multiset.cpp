#include "grz/multiset.hpp"

#include <algorithm>

#include "grz/errors.hpp"
#include "grz/parse.hpp"

namespace grz {

namespace {

std::size_t mix(std::size_t a, std::size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
}

}  // namespace

FormulaMultiset::FormulaMultiset(std::initializer_list<FormulaRef> fs) {
  FormulaMultiset acc;
  for (FormulaRef f : fs) acc = acc.plus(f);
  items_ = std::move(acc.items_);
}

FormulaMultiset FormulaMultiset::single(FormulaRef f) { return FormulaMultiset{f}; }

int FormulaMultiset::count(FormulaRef f) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), f,
                             [](const Item& a, FormulaRef b) { return formula_less(a.first, b); });
  if (it != items_.end() && it->first == f) return it->second;
  return 0;
}

int FormulaMultiset::total() const {
  int n = 0;
  for (const auto& [f, c] : items_) n += c;
  return n;
}

FormulaMultiset FormulaMultiset::plus(FormulaRef f, int n) const {
  if (n < 0) throw Error("negative multiplicity");
  if (n == 0) return *this;
  FormulaMultiset out = *this;
  auto it = std::lower_bound(out.items_.begin(), out.items_.end(), f,
                             [](const Item& a, FormulaRef b) { return formula_less(a.first, b); });
  if (it != out.items_.end() && it->first == f) {
    it->second += n;
  } else {
    out.items_.insert(it, {f, n});
  }
  return out;
}

FormulaMultiset FormulaMultiset::minus(FormulaRef f, int n) const {
  if (n < 0) throw Error("negative multiplicity");
  if (n == 0) return *this;
  FormulaMultiset out = *this;
  auto it = std::lower_bound(out.items_.begin(), out.items_.end(), f,
                             [](const Item& a, FormulaRef b) { return formula_less(a.first, b); });
  if (it == out.items_.end() || it->first != f || it->second < n)
    throw Error("removing " + print_formula(f) + " from a multiset that lacks it");
  it->second -= n;
  if (it->second == 0) out.items_.erase(it);
  return out;
}

FormulaMultiset FormulaMultiset::plus(const FormulaMultiset& other) const {
  FormulaMultiset out = *this;
  for (const auto& [f, c] : other.items_) out = out.plus(f, c);
  return out;
}

FormulaMultiset FormulaMultiset::minus(const FormulaMultiset& other) const {
  FormulaMultiset out = *this;
  for (const auto& [f, c] : other.items_) out = out.minus(f, c);
  return out;
}

FormulaMultiset FormulaMultiset::diff_truncated(const FormulaMultiset& other) const {
  FormulaMultiset out;
  for (const auto& [f, c] : items_) {
    int k = c - other.count(f);
    if (k > 0) out.items_.push_back({f, k});
  }
  return out;
}

FormulaMultiset FormulaMultiset::union_max(const FormulaMultiset& other) const {
  FormulaMultiset out = *this;
  for (const auto& [f, c] : other.items_) {
    int have = out.count(f);
    if (c > have) out = out.plus(f, c - have);
  }
  return out;
}

FormulaMultiset FormulaMultiset::intersect_min(const FormulaMultiset& other) const {
  FormulaMultiset out;
  for (const auto& [f, c] : items_) {
    int k = std::min(c, other.count(f));
    if (k > 0) out.items_.push_back({f, k});
  }
  return out;
}

bool FormulaMultiset::submultiset_of(const FormulaMultiset& other) const {
  for (const auto& [f, c] : items_)
    if (other.count(f) < c) return false;
  return true;
}

bool FormulaMultiset::all_boxed() const {
  for (const auto& [f, c] : items_)
    if (!f->is_box()) return false;
  return true;
}

std::vector<FormulaRef> FormulaMultiset::expanded() const {
  std::vector<FormulaRef> out;
  for (const auto& [f, c] : items_)
    for (int i = 0; i < c; ++i) out.push_back(f);
  return out;
}

std::size_t FormulaMultiset::hash() const {
  std::size_t h = 0x5bd1e995;
  for (const auto& [f, c] : items_) h = mix(h, mix(f->hash(), static_cast<std::size_t>(c)));
  return h;
}

}  // namespace grz

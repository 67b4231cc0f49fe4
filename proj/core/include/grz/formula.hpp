#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace grz {

enum class Connective : std::uint8_t { Bottom, Atom, Implies, Box };

// Modal formulas over ->, [] and bot.  Instances are interned: each shape
// exists exactly once for the lifetime of the process, so equality is pointer
// equality.  The sugar constructors expand to the primitive connectives.
class Formula {
public:
  Connective kind() const { return kind_; }
  bool is_bottom() const { return kind_ == Connective::Bottom; }
  bool is_atom() const { return kind_ == Connective::Atom; }
  bool is_implies() const { return kind_ == Connective::Implies; }
  bool is_box() const { return kind_ == Connective::Box; }

  const std::string& atom_name() const;  // Atom only
  const Formula* left() const;           // Implies only
  const Formula* right() const;          // Implies only
  const Formula* body() const;           // Box only

  std::size_t hash() const { return hash_; }
  int size() const { return size_; }              // connective/atom count
  int modal_depth() const { return modal_depth_; }

  static const Formula* bottom();
  static const Formula* atom(std::string_view name);
  static const Formula* implies(const Formula* a, const Formula* b);
  static const Formula* box(const Formula* a);

  static const Formula* top();                                      // ~bot
  static const Formula* negation(const Formula* a);                 // a -> bot
  static const Formula* conjunction(const Formula* a, const Formula* b);
  static const Formula* disjunction(const Formula* a, const Formula* b);
  static const Formula* diamond(const Formula* a);                  // ~[]~a

  Formula(const Formula&) = delete;
  Formula& operator=(const Formula&) = delete;

private:
  Formula() = default;
  friend class FormulaArena;

  Connective kind_ = Connective::Bottom;
  std::string name_;
  const Formula* left_ = nullptr;
  const Formula* right_ = nullptr;
  std::size_t hash_ = 0;
  int size_ = 1;
  int modal_depth_ = 0;
};

using FormulaRef = const Formula*;

// Total structural order used wherever a canonical arrangement is needed
// (multiset storage, printing, deterministic choices).  Stable across runs.
int compare(FormulaRef a, FormulaRef b);
inline bool formula_less(FormulaRef a, FormulaRef b) { return compare(a, b) < 0; }

struct FormulaLess {
  bool operator()(FormulaRef a, FormulaRef b) const { return formula_less(a, b); }
};

}  // namespace grz

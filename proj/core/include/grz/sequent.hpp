#pragma once

#include <cstddef>
#include <set>

#include "grz/multiset.hpp"

namespace grz {

struct Sequent {
  FormulaMultiset antecedent;
  FormulaMultiset succedent;

  bool operator==(const Sequent&) const = default;
  std::size_t hash() const;
};

struct SequentHash {
  std::size_t operator()(const Sequent& s) const { return s.hash(); }
};

using FormulaSet = std::set<FormulaRef, FormulaLess>;

// Subformula closure (the formula itself included).
FormulaSet subformulas(FormulaRef f);
FormulaSet subformulas(const Sequent& s);

// lambda_star({A1..Ak}) = the multiset of one [](Ai -> []Ai) per member.
FormulaMultiset lambda_star(const FormulaSet& lambda);

}  // namespace grz

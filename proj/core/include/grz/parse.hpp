#pragma once

#include <string>
#include <string_view>

#include "grz/errors.hpp"
#include "grz/formula.hpp"
#include "grz/sequent.hpp"

namespace grz {

// Surface syntax:
//
//   sequent := formulas? "=>" formulas?
//   formulas := formula ("," formula)*
//   formula := or ("->" formula)?          right associative
//   or      := and ("\/" and)*             left associative
//   and     := unary ("/\" unary)*         left associative
//   unary   := ("~" | "[]" | "<>") unary | "bot" | "top" | ident | "(" formula ")"
//
// Unicode aliases are accepted on input: ⊥ ⊤ ¬ → □ ◇ ∧ ∨ ⇒.
// Sugar (~, top, /\, \/, <>) is expanded at parse time; only bot, atoms,
// -> and [] survive in a Formula.
const Formula* parse_formula(std::string_view text);
Sequent parse_sequent(std::string_view text);

// Canonical rendering: implications fully parenthesised, multisets listed in
// the canonical formula order with one entry per copy.  parse(print(x)) == x.
std::string print_formula(FormulaRef f);
std::string print_sequent(const Sequent& s);

}  // namespace grz

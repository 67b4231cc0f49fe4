#include "grz/sequent.hpp"

namespace grz {

namespace {

std::size_t mix(std::size_t a, std::size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
}

void collect(FormulaRef f, FormulaSet& out) {
  if (!out.insert(f).second) return;
  switch (f->kind()) {
    case Connective::Bottom:
    case Connective::Atom:
      break;
    case Connective::Implies:
      collect(f->left(), out);
      collect(f->right(), out);
      break;
    case Connective::Box:
      collect(f->body(), out);
      break;
  }
}

}  // namespace

std::size_t Sequent::hash() const {
  return mix(antecedent.hash(), mix(succedent.hash(), 0x85ebca6bull));
}

FormulaSet subformulas(FormulaRef f) {
  FormulaSet out;
  collect(f, out);
  return out;
}

FormulaSet subformulas(const Sequent& s) {
  FormulaSet out;
  for (const auto& [f, c] : s.antecedent.items()) collect(f, out);
  for (const auto& [f, c] : s.succedent.items()) collect(f, out);
  return out;
}

FormulaMultiset lambda_star(const FormulaSet& lambda) {
  FormulaMultiset out;
  for (FormulaRef a : lambda)
    out = out.plus(Formula::box(Formula::implies(a, Formula::box(a))));
  return out;
}

}  // namespace grz

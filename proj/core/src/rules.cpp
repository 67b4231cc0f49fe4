#include "grz/rules.hpp"

#include "grz/errors.hpp"
#include "grz/parse.hpp"

namespace grz {

const char* to_string(RuleTag t) {
  switch (t) {
    case RuleTag::Ax: return "ax";
    case RuleTag::AxBot: return "ax-bot";
    case RuleTag::ImpL: return "imp-l";
    case RuleTag::ImpR: return "imp-r";
    case RuleTag::Refl: return "refl";
    case RuleTag::BoxInf: return "box";
    case RuleTag::BoxGrz: return "box-grz";
    case RuleTag::Cut: return "cut";
  }
  return "?";
}

const char* to_string(System s) {
  switch (s) {
    case System::GrzSeq: return "grz-seq";
    case System::GrzSeqCut: return "grz-seq-cut";
    case System::GrzInf: return "grz-inf";
    case System::GrzInfCut: return "grz-inf-cut";
  }
  return "?";
}

bool has_cut(System s) { return s == System::GrzSeqCut || s == System::GrzInfCut; }

bool is_finitary(System s) { return s == System::GrzSeq || s == System::GrzSeqCut; }

RuleInstance ax(FormulaRef witness) { return {RuleTag::Ax, witness, {}}; }
RuleInstance ax_bot() { return {RuleTag::AxBot, nullptr, {}}; }
RuleInstance imp_l(FormulaRef principal) { return {RuleTag::ImpL, principal, {}}; }
RuleInstance imp_r(FormulaRef principal) { return {RuleTag::ImpR, principal, {}}; }
RuleInstance refl(FormulaRef principal) { return {RuleTag::Refl, principal, {}}; }
RuleInstance box_inf(FormulaRef principal, FormulaMultiset box_context) {
  return {RuleTag::BoxInf, principal, std::move(box_context)};
}
RuleInstance box_grz(FormulaRef principal, FormulaMultiset box_context) {
  return {RuleTag::BoxGrz, principal, std::move(box_context)};
}
RuleInstance cut(FormulaRef formula) { return {RuleTag::Cut, formula, {}}; }

namespace {

[[noreturn]] void fail(const std::string& rule, const std::string& why) {
  throw RuleError(rule + ": " + why);
}

void need_principal(const RuleInstance& r) {
  if (r.principal == nullptr) fail(to_string(r.tag), "missing principal formula");
}

}  // namespace

std::vector<Sequent> premises_of(const RuleInstance& rule, const Sequent& c) {
  switch (rule.tag) {
    case RuleTag::Ax: {
      need_principal(rule);
      if (!c.antecedent.contains(rule.principal))
        fail("ax", "principal " + print_formula(rule.principal) + " not in the antecedent");
      if (!c.succedent.contains(rule.principal))
        fail("ax", "principal " + print_formula(rule.principal) + " not in the succedent");
      return {};
    }
    case RuleTag::AxBot: {
      if (!c.antecedent.contains(Formula::bottom()))
        fail("ax-bot", "bot not in the antecedent");
      return {};
    }
    case RuleTag::ImpL: {
      need_principal(rule);
      if (!rule.principal->is_implies()) fail("imp-l", "principal is not an implication");
      if (!c.antecedent.contains(rule.principal))
        fail("imp-l", "principal " + print_formula(rule.principal) + " not in the antecedent");
      FormulaMultiset gamma = c.antecedent.minus(rule.principal);
      return {
          {gamma.plus(rule.principal->right()), c.succedent},
          {gamma, c.succedent.plus(rule.principal->left())},
      };
    }
    case RuleTag::ImpR: {
      need_principal(rule);
      if (!rule.principal->is_implies()) fail("imp-r", "principal is not an implication");
      if (!c.succedent.contains(rule.principal))
        fail("imp-r", "principal " + print_formula(rule.principal) + " not in the succedent");
      return {{c.antecedent.plus(rule.principal->left()),
               c.succedent.minus(rule.principal).plus(rule.principal->right())}};
    }
    case RuleTag::Refl: {
      need_principal(rule);
      if (!rule.principal->is_box()) fail("refl", "principal is not a box formula");
      if (!c.antecedent.contains(rule.principal))
        fail("refl", "principal " + print_formula(rule.principal) + " not in the antecedent");
      return {{c.antecedent.plus(rule.principal->body()), c.succedent}};
    }
    case RuleTag::BoxInf: {
      need_principal(rule);
      if (!rule.principal->is_box()) fail("box", "principal is not a box formula");
      if (!c.succedent.contains(rule.principal))
        fail("box", "principal " + print_formula(rule.principal) + " not in the succedent");
      if (!rule.box_context.all_boxed()) fail("box", "modal context is not all boxed");
      if (!rule.box_context.submultiset_of(c.antecedent))
        fail("box", "modal context is not contained in the antecedent");
      FormulaRef body = rule.principal->body();
      return {
          {c.antecedent, c.succedent.minus(rule.principal).plus(body)},
          {rule.box_context, FormulaMultiset::single(body)},
      };
    }
    case RuleTag::BoxGrz: {
      need_principal(rule);
      if (!rule.principal->is_box()) fail("box-grz", "principal is not a box formula");
      if (!c.succedent.contains(rule.principal))
        fail("box-grz", "principal " + print_formula(rule.principal) + " not in the succedent");
      if (!rule.box_context.all_boxed()) fail("box-grz", "modal context is not all boxed");
      if (!rule.box_context.submultiset_of(c.antecedent))
        fail("box-grz", "modal context is not contained in the antecedent");
      FormulaRef body = rule.principal->body();
      FormulaRef guard = Formula::box(Formula::implies(body, Formula::box(body)));
      return {{rule.box_context.plus(guard), FormulaMultiset::single(body)}};
    }
    case RuleTag::Cut: {
      need_principal(rule);
      return {
          {c.antecedent, c.succedent.plus(rule.principal)},
          {c.antecedent.plus(rule.principal), c.succedent},
      };
    }
  }
  fail("rule", "unknown tag");
}

bool rule_allowed(const RuleInstance& rule, System system) {
  switch (rule.tag) {
    case RuleTag::Ax:
      if (is_finitary(system)) return true;
      return rule.principal != nullptr && rule.principal->is_atom();
    case RuleTag::AxBot:
    case RuleTag::ImpL:
    case RuleTag::ImpR:
    case RuleTag::Refl:
      return true;
    case RuleTag::BoxInf:
      return !is_finitary(system);
    case RuleTag::BoxGrz:
      return is_finitary(system);
    case RuleTag::Cut:
      return has_cut(system);
  }
  return false;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += '\n';
    out += "at [" + (v.path.empty() ? std::string("root") : v.path) + "]: " + v.message;
  }
  return out;
}

}  // namespace grz

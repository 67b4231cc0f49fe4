#pragma once

#include <string>
#include <vector>

#include "grz/sequent.hpp"

namespace grz {

// Ax / AxBot / ImpL / ImpR / Refl are shared by both calculi.  BoxGrz is the
// finitary box rule, BoxInf the non-well-founded one, Cut is optional in
// either system.
enum class RuleTag : std::uint8_t { Ax, AxBot, ImpL, ImpR, Refl, BoxInf, BoxGrz, Cut };

enum class System : std::uint8_t { GrzSeq, GrzSeqCut, GrzInf, GrzInfCut };

const char* to_string(RuleTag t);
const char* to_string(System s);
bool has_cut(System s);
bool is_finitary(System s);  // GrzSeq side (BoxGrz, compound axioms)

// A rule instance is determined by its tag, its principal formula and, for
// the box rules, the boxed submultiset of the antecedent singled out as the
// modal context.  Together with the conclusion this fixes the premises.
struct RuleInstance {
  RuleTag tag = RuleTag::Ax;
  FormulaRef principal = nullptr;   // null for AxBot and never for others
  FormulaMultiset box_context;      // BoxInf/BoxGrz only

  bool operator==(const RuleInstance&) const = default;
};

RuleInstance ax(FormulaRef witness);
RuleInstance ax_bot();
RuleInstance imp_l(FormulaRef principal);
RuleInstance imp_r(FormulaRef principal);
RuleInstance refl(FormulaRef principal);
RuleInstance box_inf(FormulaRef principal, FormulaMultiset box_context);
RuleInstance box_grz(FormulaRef principal, FormulaMultiset box_context);
RuleInstance cut(FormulaRef formula);

// Premises of `rule` applied backwards to `conclusion`, left premise first.
// Throws RuleError naming the violated side condition when the instance does
// not fit the conclusion.
std::vector<Sequent> premises_of(const RuleInstance& rule, const Sequent& conclusion);

// Whether the tag belongs to the system at all, including the restriction of
// Ax to atomic principals on the non-well-founded side.
bool rule_allowed(const RuleInstance& rule, System system);

struct Violation {
  std::string path;  // "" is the root, then dot separated child indices
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

}  // namespace grz

#pragma once

#include <optional>
#include <string_view>

#include "grz/inf_proof.hpp"

namespace grz {

// Strongly admissible maps on non-well-founded proofs.  Each one rewrites
// the main fragment only: contexts are adjusted node by node, the traced
// formula is spliced out where it becomes principal, and every right box
// premise is passed through untouched.  That makes the maps level
// nonexpansive and height nonincreasing by construction.

// Gamma => Delta  to  Pi, Gamma => Delta, Sigma.
InfProofPtr weaken(const InfProofPtr& p, const FormulaMultiset& pi, const FormulaMultiset& sigma);

// Gamma, A -> B => Delta  to  Gamma, B => Delta.
InfProofPtr invert_imp_left_l(const InfProofPtr& p, FormulaRef target);

// Gamma, A -> B => Delta  to  Gamma => A, Delta.
InfProofPtr invert_imp_left_r(const InfProofPtr& p, FormulaRef target);

// Gamma => A -> B, Delta  to  Gamma, A => B, Delta.
InfProofPtr invert_imp_right(const InfProofPtr& p, FormulaRef target);

// Gamma => bot, Delta  to  Gamma => Delta.
InfProofPtr invert_bot_right(const InfProofPtr& p);

// Gamma => []A, Delta  to  Gamma => A, Delta.
InfProofPtr invert_box_right(const InfProofPtr& p, FormulaRef target);

// Gamma, p, p => Delta  to  Gamma, p => Delta (p atomic).
InfProofPtr contract_left(const InfProofPtr& p, FormulaRef atom);

// Gamma => p, p, Delta  to  Gamma => p, Delta (p atomic).
InfProofPtr contract_right(const InfProofPtr& p, FormulaRef atom);

enum class TransformKind {
  Weaken,
  InvImpLeftL,
  InvImpLeftR,
  InvImpRight,
  InvBotRight,
  InvBoxRight,
  ContractLeft,
  ContractRight,
};

// Names used on the command line: wk, li_imp, ri_imp, inv_imp, inv_bot,
// li_box, acl, acr.
const char* to_string(TransformKind k);
std::optional<TransformKind> transform_kind_from_string(std::string_view name);

struct TransformSpec {
  TransformKind kind = TransformKind::Weaken;
  FormulaMultiset pi;      // Weaken only
  FormulaMultiset sigma;   // Weaken only
  FormulaRef target = nullptr;  // everything except Weaken/InvBotRight
};

InfProofPtr apply_transform(const InfProofPtr& p, const TransformSpec& spec);

}  // namespace grz

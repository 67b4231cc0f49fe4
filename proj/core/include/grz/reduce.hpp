#pragma once

#include "grz/metric.hpp"
#include "grz/transform.hpp"

namespace grz {

// A cut to be eliminated: left proves Gamma => Delta, A and right proves
// Gamma, A => Delta, both with cut-free main fragments.
struct ReductionRequest {
  FormulaRef cut_formula = nullptr;
  InfProofPtr left;
  InfProofPtr right;
};

// The reducing map R_A.  Produces a proof of Gamma => Delta whose main
// fragment is cut free; any residual cuts sit strictly behind a right box
// premise.  Dispatches on the cut formula:
//   bot    right inversion of the left input
//   atom   induction on the left input's local height
//   ->     composition of the two subformula reductions
//   []     double induction on the pair of local heights
// Validates the context agreement and the cut-freeness of both main
// fragments first; throws RuleError when the request is malformed.
InfProofPtr reduce(const ReductionRequest& req, Budget& budget);
InfProofPtr reduce(const ReductionRequest& req);

// The dispatch without the entry checks, for callers that establish the
// invariants themselves (the cut elimination operator does).
InfProofPtr reduce_unchecked(FormulaRef cut_formula, const InfProofPtr& left,
                             const InfProofPtr& right, Budget& budget);

}  // namespace grz

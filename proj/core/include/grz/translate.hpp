#pragma once

#include "grz/cutelim.hpp"
#include "grz/metric.hpp"

namespace grz {

// A proof of Gamma, A => A, Delta built from atomic axioms only, by
// structural recursion on A.  Valid in the non-well-founded system.
FiniteProof ax_expand(const FormulaMultiset& gamma, FormulaRef a, const FormulaMultiset& delta);

// The cyclic proof of  [](( [](A -> []A) -> A )) => A.  Its single cycle
// crosses the right premise of a box rule, and for atomic A its main
// fragment is the standard picture with local height 4.
CyclicProof grz_schema(FormulaRef a);

// Embedding of finitary proofs (cuts allowed) into the non-well-founded
// system.  Compound axioms are expanded, the finitary box rule becomes a
// box-and-cut against the schema proof; everything else is kept in place.
InfProofPtr seq_to_inf(const FiniteProof& p);

// Finitisation of a cut-free non-well-founded proof: a finitary proof of
// lambda_star(lambda), Gamma => Delta.  Throws on cuts and on budget
// exhaustion (a proof whose cycles dodge the bookkeeping set).
FiniteProof inf_to_seq(const InfProofPtr& p, const FormulaSet& lambda, Budget& budget);
FiniteProof inf_to_seq(const InfProofPtr& p);

// Weakening for finitary proofs: Pi joins every antecedent except behind the
// finitary box rule, Sigma every succedent likewise.
FiniteProof weak_seq(const FiniteProof& p, const FormulaMultiset& pi,
                     const FormulaMultiset& sigma);

// Cut elimination for the finitary system, through the lazy side and back.
FiniteProof eliminate_finitary(const FiniteProof& p, Budget& budget);
FiniteProof eliminate_finitary(const FiniteProof& p);

}  // namespace grz

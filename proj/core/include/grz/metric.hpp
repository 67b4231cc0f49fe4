#pragma once

#include <optional>

#include "grz/inf_proof.hpp"

namespace grz {

// A finite prefix of a non-well-founded proof.  Nodes without a rule are
// holes: places where the prefix was truncated at the right premise of a box
// rule (or, for expand_all overruns, nowhere at all since that throws).
struct Fragment {
  Sequent sequent;
  std::optional<RuleInstance> rule;
  std::vector<Fragment> children;

  bool is_hole() const { return !rule.has_value(); }
  bool operator==(const Fragment&) const = default;
};

int height(const Fragment& f);       // edges on the longest root path
int node_count(const Fragment& f);   // rule-bearing nodes
int hole_count(const Fragment& f);
int count_tag(const Fragment& f, RuleTag tag);

// Level-n observation: descend through everything, lowering the level by one
// when crossing the right premise of a box rule and truncating to a hole at
// level zero.  expand(p, 1) is the main fragment of p.
Fragment expand(const InfProofPtr& p, int level, Budget& budget);
Fragment expand(const InfProofPtr& p, int level);
Fragment main_fragment(const InfProofPtr& p, Budget& budget);
Fragment main_fragment(const InfProofPtr& p);

// Expand with no truncation; throws BudgetError if the proof is not finite.
Fragment expand_all(const InfProofPtr& p, Budget& budget);
FiniteProof fragment_to_finite(const Fragment& f);  // error on holes

// Validation of the level-n prefix under the rules of `system`.
ValidationReport check_level(const InfProofPtr& p, System system, int level, Budget& budget);
ValidationReport check_level(const InfProofPtr& p, System system, int level);
ValidationReport check_fragment(const Fragment& f, System system);

// Local height: leaves 0, up rules and left box premises add one, the right
// premise of a box does not count.
int local_height(const InfProofPtr& p, Budget& budget);
int local_height(const InfProofPtr& p);

// The similarity family: sim_level(p, q, 0) always holds; at level n+1 both
// roots must carry the same instance and premises must agree at level n+1,
// except across right box premises where the level drops to n.
bool sim_level(const InfProofPtr& p, const InfProofPtr& q, int n, Budget& budget);
bool sim_level(const InfProofPtr& p, const InfProofPtr& q, int n);

// Cut-rank observation: at level n >= 1 the main fragment must be cut free
// and right box premises must pass at level n-1.
bool cut_free_to(const InfProofPtr& p, int n, Budget& budget);
bool cut_free_to(const InfProofPtr& p, int n);

// d(p, q) as a dyadic exponent: d = 2^-e when some disagreement shows up at
// level e+1 <= max_level (exact), otherwise d <= 2^-max_level (bounded).
struct Distance {
  int exponent;
  bool exact;
};
Distance distance(const InfProofPtr& p, const InfProofPtr& q, int max_level, Budget& budget);
Distance distance(const InfProofPtr& p, const InfProofPtr& q, int max_level);

}  // namespace grz

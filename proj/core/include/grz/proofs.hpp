#pragma once

#include <optional>
#include <vector>

#include "grz/rules.hpp"

namespace grz {

// Finite proof tree; the workhorse of the finitary calculus.
struct FiniteProof {
  Sequent sequent;
  RuleInstance rule;
  std::vector<FiniteProof> children;
};

// Build a node, computing nothing: callers are expected to validate with
// check_finite where it matters.
FiniteProof make_node(Sequent sequent, RuleInstance rule, std::vector<FiniteProof> children);

ValidationReport check_finite(const FiniteProof& p, System system);

int count_cuts(const FiniteProof& p);
int node_count(const FiniteProof& p);
int height(const FiniteProof& p);

// Finite presentation of a regular non-well-founded proof: a node table with
// tree children and back edges.  A back edge must point at a strict ancestor
// carrying the very sequent the parent rule expects, and every cycle has to
// pass through the right premise of a box rule.
struct CyclicChild {
  bool backedge = false;
  int target = -1;  // node index either way

  bool operator==(const CyclicChild&) const = default;
};

struct CyclicNode {
  Sequent sequent;
  std::optional<RuleInstance> rule;  // nullopt marks a hole (truncated expansion)
  std::vector<CyclicChild> children;
};

struct CyclicProof {
  std::vector<CyclicNode> nodes;
  int root = 0;
};

struct CyclicCheckOptions {
  bool allow_holes = false;
};

ValidationReport check_cyclic(const CyclicProof& p, System system, CyclicCheckOptions opts = {});

int count_cuts(const CyclicProof& p);
int count_holes(const CyclicProof& p);
bool has_backedges(const CyclicProof& p);

// Tree-shaped, hole-free cyclic presentations convert to finite proofs.
FiniteProof to_finite_proof(const CyclicProof& p);
CyclicProof from_finite_proof(const FiniteProof& p);

}  // namespace grz

#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

#include "grz/errors.hpp"
#include "grz/proofs.hpp"

namespace grz {

inline constexpr std::size_t kDefaultNodeBudget = 100000;

// Counts the nodes an operation is allowed to visit while peeling a
// non-well-founded proof.  Shared by nested calls; throws BudgetError when
// the limit is hit, so a diverging demand cannot run away.
class Budget {
public:
  explicit Budget(std::size_t limit = kDefaultNodeBudget) : limit_(limit) {}

  void tick(std::size_t n = 1) {
    std::size_t now = used_.fetch_add(n, std::memory_order_relaxed) + n;
    if (now > limit_)
      throw BudgetError("node budget of " + std::to_string(limit_) + " exhausted");
  }
  std::size_t used() const { return used_.load(std::memory_order_relaxed); }
  std::size_t limit() const { return limit_; }

private:
  std::size_t limit_;
  std::atomic<std::size_t> used_{0};
};

class InfProof;
using InfProofPtr = std::shared_ptr<const InfProof>;
using InfThunk = std::function<InfProofPtr()>;

// A node of a possibly non-well-founded proof.  Children are produced by
// thunks and memoised on first demand, so only the part of the proof an
// operation actually inspects is ever materialised.  Nodes are immutable
// once created; forcing is serialised per node, making demand idempotent.
class InfProof : public std::enable_shared_from_this<InfProof> {
public:
  const Sequent& sequent() const { return sequent_; }
  const RuleInstance& rule() const { return rule_; }
  int child_count() const { return static_cast<int>(cells_.size()); }
  InfProofPtr child(int i) const;
  bool is_leaf() const { return cells_.empty(); }
  const char* provenance() const { return provenance_; }

  static InfProofPtr leaf(Sequent sequent, RuleInstance rule, const char* provenance);
  static InfProofPtr node(Sequent sequent, RuleInstance rule, std::vector<InfThunk> children,
                          const char* provenance);
  static InfProofPtr node_now(Sequent sequent, RuleInstance rule,
                              std::vector<InfProofPtr> children, const char* provenance);

  InfProof(const InfProof&) = delete;
  InfProof& operator=(const InfProof&) = delete;

private:
  InfProof() = default;

  struct Cell {
    mutable InfThunk thunk;
    mutable InfProofPtr value;
  };

  Sequent sequent_;
  RuleInstance rule_;
  mutable std::mutex mu_;
  mutable std::vector<Cell> cells_;
  const char* provenance_ = "";
};

// Lazy unfolding of a finite presentation into the proof it denotes.  The
// presentation is validated first (under the cut-permitting reading) and the
// first violation is thrown as an Error.
InfProofPtr unfold(const CyclicProof& p);
InfProofPtr unfold(std::shared_ptr<const CyclicProof> p);

// Embed a finite object as an already-forced lazy proof.
InfProofPtr from_finite(const FiniteProof& p, const char* provenance = "finite");

}  // namespace grz

#include "grz/cutelim.hpp"

#include <mutex>
#include <unordered_map>

namespace grz {

namespace {

InfThunk ready(InfProofPtr p) {
  return [p = std::move(p)] { return p; };
}

InfThunk reuse_right(const InfProofPtr& p) {
  return [p] { return p->child(1); };
}

}  // namespace

InfProofPtr clear_main_fragment(const InfProofPtr& p, Budget& budget) {
  budget.tick();
  if (p->is_leaf()) return p;
  const RuleInstance& rule = p->rule();
  switch (rule.tag) {
    case RuleTag::ImpR:
    case RuleTag::Refl:
      return InfProof::node_now(p->sequent(), rule, {clear_main_fragment(p->child(0), budget)},
                                "estar");
    case RuleTag::ImpL:
      return InfProof::node_now(p->sequent(), rule,
                                {clear_main_fragment(p->child(0), budget),
                                 clear_main_fragment(p->child(1), budget)},
                                "estar");
    case RuleTag::BoxInf:
      return InfProof::node(p->sequent(), rule,
                            {ready(clear_main_fragment(p->child(0), budget)), reuse_right(p)},
                            "estar");
    case RuleTag::Cut:
      return reduce_unchecked(rule.principal, clear_main_fragment(p->child(0), budget),
                              clear_main_fragment(p->child(1), budget), budget);
    default:
      throw RuleError(std::string("cut elimination: unexpected ") + to_string(rule.tag));
  }
}

InfProofPtr clear_main_fragment(const InfProofPtr& p) {
  Budget budget;
  return clear_main_fragment(p, budget);
}

namespace {

InfProofPtr rebuild_with(const Transformer& u, const InfProofPtr& p, Budget& budget) {
  budget.tick();
  if (p->is_leaf()) return p;
  const RuleInstance& rule = p->rule();
  switch (rule.tag) {
    case RuleTag::ImpR:
    case RuleTag::Refl:
      return InfProof::node_now(p->sequent(), rule, {rebuild_with(u, p->child(0), budget)},
                                "step");
    case RuleTag::ImpL:
      return InfProof::node_now(
          p->sequent(), rule,
          {rebuild_with(u, p->child(0), budget), rebuild_with(u, p->child(1), budget)},
          "step");
    case RuleTag::BoxInf:
      return InfProof::node(p->sequent(), rule,
                            {ready(rebuild_with(u, p->child(0), budget)),
                             [u, p] { return u(p->child(1)); }},
                            "step");
    default:
      throw RuleError(std::string("cut elimination: unexpected ") + to_string(rule.tag) +
                      " in a cleared main fragment");
  }
}

}  // namespace

InfProofPtr step(const Transformer& u, const InfProofPtr& p, Budget& budget) {
  InfProofPtr cleared = cut_free_to(p, 1, budget) ? p : clear_main_fragment(p, budget);
  return rebuild_with(u, cleared, budget);
}

InfProofPtr step(const Transformer& u, const InfProofPtr& p) {
  Budget budget;
  return step(u, p, budget);
}

InfProofPtr iterate(int n, const InfProofPtr& p) {
  if (n <= 0) return p;
  return step([n](const InfProofPtr& q) { return iterate(n - 1, q); }, p);
}

namespace {

struct ElimState {
  struct Entry {
    InfProofPtr input;  // pins the key, so the address cannot be recycled
    std::weak_ptr<const InfProof> output;
  };
  std::mutex mu;
  std::unordered_map<const InfProof*, Entry> memo;
};

InfProofPtr eliminate_impl(const InfProofPtr& p, const std::shared_ptr<ElimState>& st) {
  {
    std::lock_guard<std::mutex> lock(st->mu);
    auto it = st->memo.find(p.get());
    if (it != st->memo.end())
      if (InfProofPtr hit = it->second.output.lock()) return hit;
  }
  Transformer u = [st](const InfProofPtr& q) { return eliminate_impl(q, st); };
  Budget budget;
  InfProofPtr out = step(u, p, budget);
  {
    std::lock_guard<std::mutex> lock(st->mu);
    st->memo[p.get()] = ElimState::Entry{p, out};
  }
  return out;
}

}  // namespace

InfProofPtr eliminate(const InfProofPtr& p) {
  return eliminate_impl(p, std::make_shared<ElimState>());
}

}  // namespace grz

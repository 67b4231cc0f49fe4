#include "grz/search.hpp"

#include <utility>
#include <vector>

#include "grz/formula.hpp"
#include "grz/multiset.hpp"

namespace grz {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Proved:
      return "proved";
    case Verdict::Unprovable:
      return "unprovable";
    case Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

FormulaRef shared_formula(const Sequent& s) {
  for (const auto& [f, n] : s.antecedent.items()) {
    (void)n;
    if (s.succedent.contains(f)) return f;
  }
  return nullptr;
}

FormulaRef shared_atom(const Sequent& s) {
  for (const auto& [f, n] : s.antecedent.items()) {
    (void)n;
    if (f->kind() == Connective::Atom && s.succedent.contains(f)) return f;
  }
  return nullptr;
}

FormulaRef least_implication(const FormulaMultiset& ms) {
  for (const auto& [f, n] : ms.items()) {
    (void)n;
    if (f->kind() == Connective::Implies) return f;
  }
  return nullptr;
}

std::vector<FormulaRef> distinct_boxes(const FormulaMultiset& ms) {
  std::vector<FormulaRef> out;
  for (const auto& [f, n] : ms.items()) {
    (void)n;
    if (f->kind() == Connective::Box) out.push_back(f);
  }
  return out;
}

// One copy of every distinct boxed antecedent formula; the widest context the
// box rules admit, and any proof from a narrower one weakens into it.
FormulaMultiset box_context_of(const FormulaMultiset& ant) {
  FormulaMultiset pi;
  for (FormulaRef b : distinct_boxes(ant)) pi = pi.plus(b, 1);
  return pi;
}

struct SeqSearcher {
  std::uint64_t limit = 0;
  std::uint64_t visited = 0;
  bool limit_hit = false;
  bool lossy_prune = false;
  std::vector<Sequent> path;

  std::optional<FiniteProof> search(const Sequent& goal, const FormulaSet& refl_done) {
    if (limit_hit) return std::nullopt;
    if (++visited > limit) {
      limit_hit = true;
      return std::nullopt;
    }
    if (goal.antecedent.contains(Formula::bottom())) return make_node(goal, ax_bot(), {});
    if (FormulaRef w = shared_formula(goal)) return make_node(goal, ax(w), {});
    for (const auto& prev : path)
      if (prev == goal) return std::nullopt;
    path.push_back(goal);
    auto out = expand(goal, refl_done);
    path.pop_back();
    return out;
  }

  std::optional<FiniteProof> expand(const Sequent& goal, const FormulaSet& refl_done) {
    if (FormulaRef p = least_implication(goal.succedent)) {
      RuleInstance r = imp_r(p);
      auto prem = premises_of(r, goal);
      auto sub = search(prem[0], refl_done);
      if (!sub) return std::nullopt;
      std::vector<FiniteProof> kids;
      kids.push_back(std::move(*sub));
      return make_node(goal, r, std::move(kids));
    }
    if (FormulaRef p = least_implication(goal.antecedent)) {
      RuleInstance r = imp_l(p);
      auto prem = premises_of(r, goal);
      auto left = search(prem[0], refl_done);
      if (!left) return std::nullopt;
      auto right = search(prem[1], refl_done);
      if (!right) return std::nullopt;
      std::vector<FiniteProof> kids;
      kids.push_back(std::move(*left));
      kids.push_back(std::move(*right));
      return make_node(goal, r, std::move(kids));
    }
    for (FormulaRef b : distinct_boxes(goal.antecedent)) {
      if (goal.antecedent.contains(b->body())) continue;
      if (refl_done.count(b)) {
        lossy_prune = true;
        continue;
      }
      RuleInstance r = refl(b);
      auto prem = premises_of(r, goal);
      FormulaSet done = refl_done;
      done.insert(b);
      auto sub = search(prem[0], done);
      if (!sub) return std::nullopt;
      std::vector<FiniteProof> kids;
      kids.push_back(std::move(*sub));
      return make_node(goal, r, std::move(kids));
    }
    FormulaMultiset pi = box_context_of(goal.antecedent);
    for (const auto& [f, n] : goal.succedent.items()) {
      (void)n;
      if (f->kind() != Connective::Box) continue;
      RuleInstance r = box_grz(f, pi);
      auto prem = premises_of(r, goal);
      auto sub = search(prem[0], FormulaSet{});
      if (sub) {
        std::vector<FiniteProof> kids;
        kids.push_back(std::move(*sub));
        return make_node(goal, r, std::move(kids));
      }
      if (limit_hit) return std::nullopt;
    }
    return std::nullopt;
  }
};

struct PathEntry {
  Sequent sequent;
  int node = 0;
  int crossings = 0;
};

struct InfSearcher {
  std::uint64_t limit = 0;
  std::uint64_t visited = 0;
  bool limit_hit = false;
  bool lossy_prune = false;
  std::vector<CyclicNode> nodes;
  std::vector<PathEntry> path;

  CyclicChild emit(const Sequent& s, RuleInstance r, std::vector<CyclicChild> kids) {
    int idx = static_cast<int>(nodes.size());
    nodes.push_back(CyclicNode{s, std::move(r), std::move(kids)});
    return CyclicChild{false, idx};
  }

  std::optional<CyclicChild> search(const Sequent& goal, int crossings,
                                    const FormulaSet& refl_done) {
    if (limit_hit) return std::nullopt;
    if (++visited > limit) {
      limit_hit = true;
      return std::nullopt;
    }
    if (goal.antecedent.contains(Formula::bottom())) return emit(goal, ax_bot(), {});
    if (FormulaRef w = shared_atom(goal)) return emit(goal, ax(w), {});
    // A repeat below a box right premise closes into a back edge; a repeat
    // with no crossing in between is a dead loop.
    int back_target = -1;
    bool repeat = false;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      if (!(it->sequent == goal)) continue;
      repeat = true;
      if (it->crossings < crossings) {
        back_target = it->node;
        break;
      }
    }
    if (back_target >= 0) return CyclicChild{true, back_target};
    if (repeat) {
      lossy_prune = true;
      return std::nullopt;
    }
    int self = static_cast<int>(nodes.size());
    nodes.push_back(CyclicNode{goal, std::nullopt, {}});
    path.push_back(PathEntry{goal, self, crossings});
    bool ok = expand(self, goal, crossings, refl_done);
    path.pop_back();
    if (!ok) {
      nodes.resize(static_cast<std::size_t>(self));
      return std::nullopt;
    }
    return CyclicChild{false, self};
  }

  bool expand(int self, const Sequent& goal, int crossings, const FormulaSet& refl_done) {
    if (FormulaRef p = least_implication(goal.succedent)) {
      RuleInstance r = imp_r(p);
      auto prem = premises_of(r, goal);
      auto kid = search(prem[0], crossings, refl_done);
      if (!kid) return false;
      nodes[static_cast<std::size_t>(self)].rule = r;
      nodes[static_cast<std::size_t>(self)].children = {*kid};
      return true;
    }
    if (FormulaRef p = least_implication(goal.antecedent)) {
      RuleInstance r = imp_l(p);
      auto prem = premises_of(r, goal);
      auto left = search(prem[0], crossings, refl_done);
      if (!left) return false;
      auto right = search(prem[1], crossings, refl_done);
      if (!right) return false;
      nodes[static_cast<std::size_t>(self)].rule = r;
      nodes[static_cast<std::size_t>(self)].children = {*left, *right};
      return true;
    }
    for (FormulaRef b : distinct_boxes(goal.antecedent)) {
      if (goal.antecedent.contains(b->body())) continue;
      if (refl_done.count(b)) {
        lossy_prune = true;
        continue;
      }
      RuleInstance r = refl(b);
      auto prem = premises_of(r, goal);
      FormulaSet done = refl_done;
      done.insert(b);
      auto kid = search(prem[0], crossings, done);
      if (!kid) return false;
      nodes[static_cast<std::size_t>(self)].rule = r;
      nodes[static_cast<std::size_t>(self)].children = {*kid};
      return true;
    }
    FormulaMultiset pi = box_context_of(goal.antecedent);
    for (const auto& [f, n] : goal.succedent.items()) {
      (void)n;
      if (f->kind() != Connective::Box) continue;
      RuleInstance r = box_inf(f, pi);
      auto prem = premises_of(r, goal);
      std::size_t mark = nodes.size();
      auto left = search(prem[0], crossings, refl_done);
      if (left) {
        auto right = search(prem[1], crossings + 1, FormulaSet{});
        if (right) {
          nodes[static_cast<std::size_t>(self)].rule = r;
          nodes[static_cast<std::size_t>(self)].children = {*left, *right};
          return true;
        }
      }
      nodes.resize(mark);
      if (limit_hit) return false;
    }
    return false;
  }
};

}  // namespace

SearchResult prove_seq(const Sequent& goal, const SearchLimits& limits) {
  SeqSearcher s;
  s.limit = limits.max_nodes;
  auto proof = s.search(goal, FormulaSet{});
  SearchResult out;
  out.nodes_visited = s.visited;
  if (proof) {
    out.verdict = Verdict::Proved;
    out.finite = std::move(*proof);
  } else if (s.limit_hit || s.lossy_prune) {
    out.verdict = Verdict::Unknown;
  } else {
    out.verdict = Verdict::Unprovable;
  }
  return out;
}

SearchResult prove_inf(const Sequent& goal, const SearchLimits& limits) {
  InfSearcher s;
  s.limit = limits.max_nodes;
  auto res = s.search(goal, 0, FormulaSet{});
  SearchResult out;
  out.nodes_visited = s.visited;
  if (res && !res->backedge) {
    CyclicProof proof;
    proof.nodes = std::move(s.nodes);
    proof.root = res->target;
    auto report = check_cyclic(proof, System::GrzInf);
    if (report.ok()) {
      out.verdict = Verdict::Proved;
      out.cyclic = std::move(proof);
    } else {
      out.verdict = Verdict::Unknown;
    }
    return out;
  }
  if (s.limit_hit || s.lossy_prune) {
    out.verdict = Verdict::Unknown;
  } else {
    out.verdict = Verdict::Unprovable;
  }
  return out;
}

}  // namespace grz

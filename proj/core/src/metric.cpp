#include "grz/metric.hpp"

#include <algorithm>
#include <string>

#include "grz/parse.hpp"

namespace grz {

namespace {

bool is_box_right(const RuleInstance& rule, int i) {
  return rule.tag == RuleTag::BoxInf && i == 1;
}

std::string child_path(const std::string& path, int i) {
  return path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
}

}  // namespace

int height(const Fragment& f) {
  int h = 0;
  for (const Fragment& c : f.children) h = std::max(h, 1 + height(c));
  return h;
}

int node_count(const Fragment& f) {
  int n = f.is_hole() ? 0 : 1;
  for (const Fragment& c : f.children) n += node_count(c);
  return n;
}

int hole_count(const Fragment& f) {
  int n = f.is_hole() ? 1 : 0;
  for (const Fragment& c : f.children) n += hole_count(c);
  return n;
}

int count_tag(const Fragment& f, RuleTag tag) {
  int n = (f.rule && f.rule->tag == tag) ? 1 : 0;
  for (const Fragment& c : f.children) n += count_tag(c, tag);
  return n;
}

Fragment expand(const InfProofPtr& p, int level, Budget& budget) {
  budget.tick();
  if (level <= 0) return Fragment{p->sequent(), std::nullopt, {}};
  Fragment out{p->sequent(), p->rule(), {}};
  for (int i = 0; i < p->child_count(); ++i) {
    int next = is_box_right(p->rule(), i) ? level - 1 : level;
    out.children.push_back(expand(p->child(i), next, budget));
  }
  return out;
}

Fragment expand(const InfProofPtr& p, int level) {
  Budget budget;
  return expand(p, level, budget);
}

Fragment main_fragment(const InfProofPtr& p, Budget& budget) { return expand(p, 1, budget); }

Fragment main_fragment(const InfProofPtr& p) {
  Budget budget;
  return main_fragment(p, budget);
}

Fragment expand_all(const InfProofPtr& p, Budget& budget) {
  budget.tick();
  Fragment out{p->sequent(), p->rule(), {}};
  for (int i = 0; i < p->child_count(); ++i)
    out.children.push_back(expand_all(p->child(i), budget));
  return out;
}

FiniteProof fragment_to_finite(const Fragment& f) {
  if (f.is_hole()) throw Error("fragment has a hole at '" + print_sequent(f.sequent) + "'");
  FiniteProof out{f.sequent, *f.rule, {}};
  for (const Fragment& c : f.children) out.children.push_back(fragment_to_finite(c));
  return out;
}

namespace {

void check_level_node(const InfProofPtr& p, System system, int level, Budget& budget,
                      const std::string& path, ValidationReport& report) {
  budget.tick();
  if (level <= 0) return;
  const RuleInstance& rule = p->rule();
  if (!rule_allowed(rule, system)) {
    report.violations.push_back(
        {path, std::string(to_string(rule.tag)) + " is not a rule of " + to_string(system)});
    return;
  }
  std::vector<Sequent> premises;
  try {
    premises = premises_of(rule, p->sequent());
  } catch (const RuleError& e) {
    report.violations.push_back({path, e.what()});
    return;
  }
  if (static_cast<int>(premises.size()) != p->child_count()) {
    report.violations.push_back({path, std::string(to_string(rule.tag)) + " expects " +
                                           std::to_string(premises.size()) +
                                           " premises, node has " +
                                           std::to_string(p->child_count())});
    return;
  }
  for (int i = 0; i < p->child_count(); ++i) {
    InfProofPtr c = p->child(i);
    if (!(c->sequent() == premises[static_cast<std::size_t>(i)])) {
      report.violations.push_back(
          {child_path(path, i),
           "premise mismatch: expected '" +
               print_sequent(premises[static_cast<std::size_t>(i)]) + "', found '" +
               print_sequent(c->sequent()) + "'"});
      continue;
    }
    int next = is_box_right(rule, i) ? level - 1 : level;
    check_level_node(c, system, next, budget, child_path(path, i), report);
  }
}

void check_fragment_node(const Fragment& f, System system, const std::string& path,
                         ValidationReport& report) {
  if (f.is_hole()) {
    if (!f.children.empty()) report.violations.push_back({path, "hole with children"});
    return;
  }
  const RuleInstance& rule = *f.rule;
  if (!rule_allowed(rule, system)) {
    report.violations.push_back(
        {path, std::string(to_string(rule.tag)) + " is not a rule of " + to_string(system)});
    return;
  }
  std::vector<Sequent> premises;
  try {
    premises = premises_of(rule, f.sequent);
  } catch (const RuleError& e) {
    report.violations.push_back({path, e.what()});
    return;
  }
  if (premises.size() != f.children.size()) {
    report.violations.push_back({path, std::string(to_string(rule.tag)) + " expects " +
                                           std::to_string(premises.size()) +
                                           " premises, node has " +
                                           std::to_string(f.children.size())});
    return;
  }
  for (std::size_t i = 0; i < premises.size(); ++i) {
    if (!(f.children[i].sequent == premises[i])) {
      report.violations.push_back(
          {child_path(path, static_cast<int>(i)),
           "premise mismatch: expected '" + print_sequent(premises[i]) + "', found '" +
               print_sequent(f.children[i].sequent) + "'"});
      continue;
    }
    check_fragment_node(f.children[i], system, child_path(path, static_cast<int>(i)), report);
  }
}

}  // namespace

ValidationReport check_level(const InfProofPtr& p, System system, int level, Budget& budget) {
  ValidationReport report;
  if (is_finitary(system)) {
    report.violations.push_back({"", "lazy proofs belong to the non-well-founded systems"});
    return report;
  }
  check_level_node(p, system, level, budget, "", report);
  return report;
}

ValidationReport check_level(const InfProofPtr& p, System system, int level) {
  Budget budget;
  return check_level(p, system, level, budget);
}

ValidationReport check_fragment(const Fragment& f, System system) {
  ValidationReport report;
  check_fragment_node(f, system, "", report);
  return report;
}

int local_height(const InfProofPtr& p, Budget& budget) {
  budget.tick();
  if (p->is_leaf()) return 0;
  switch (p->rule().tag) {
    case RuleTag::BoxInf:
      return 1 + local_height(p->child(0), budget);
    default: {
      int h = 0;
      for (int i = 0; i < p->child_count(); ++i)
        h = std::max(h, local_height(p->child(i), budget));
      return 1 + h;
    }
  }
}

int local_height(const InfProofPtr& p) {
  Budget budget;
  return local_height(p, budget);
}

bool sim_level(const InfProofPtr& p, const InfProofPtr& q, int n, Budget& budget) {
  if (n <= 0) return true;
  if (p.get() == q.get()) return true;  // similarity is reflexive at every level
  budget.tick();
  if (!(p->sequent() == q->sequent())) return false;
  if (!(p->rule() == q->rule())) return false;
  if (p->child_count() != q->child_count()) return false;
  for (int i = 0; i < p->child_count(); ++i) {
    int next = is_box_right(p->rule(), i) ? n - 1 : n;
    if (!sim_level(p->child(i), q->child(i), next, budget)) return false;
  }
  return true;
}

bool sim_level(const InfProofPtr& p, const InfProofPtr& q, int n) {
  Budget budget;
  return sim_level(p, q, n, budget);
}

bool cut_free_to(const InfProofPtr& p, int n, Budget& budget) {
  if (n <= 0) return true;
  budget.tick();
  if (p->rule().tag == RuleTag::Cut) return false;
  for (int i = 0; i < p->child_count(); ++i) {
    int next = is_box_right(p->rule(), i) ? n - 1 : n;
    if (!cut_free_to(p->child(i), next, budget)) return false;
  }
  return true;
}

bool cut_free_to(const InfProofPtr& p, int n) {
  Budget budget;
  return cut_free_to(p, n, budget);
}

Distance distance(const InfProofPtr& p, const InfProofPtr& q, int max_level, Budget& budget) {
  for (int n = 1; n <= max_level; ++n)
    if (!sim_level(p, q, n, budget)) return {n - 1, true};
  return {max_level, false};
}

Distance distance(const InfProofPtr& p, const InfProofPtr& q, int max_level) {
  Budget budget;
  return distance(p, q, max_level, budget);
}

}  // namespace grz

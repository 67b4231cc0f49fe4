#include "grz/proofs.hpp"

#include <algorithm>
#include <string>

#include "grz/errors.hpp"
#include "grz/parse.hpp"

namespace grz {

namespace {

std::string child_path(const std::string& path, int i) {
  return path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
}

void check_finite_node(const FiniteProof& p, System system, const std::string& path,
                       ValidationReport& report) {
  if (!rule_allowed(p.rule, system)) {
    report.violations.push_back(
        {path, std::string(to_string(p.rule.tag)) + " is not a rule of " + to_string(system)});
    return;
  }
  std::vector<Sequent> premises;
  try {
    premises = premises_of(p.rule, p.sequent);
  } catch (const RuleError& e) {
    report.violations.push_back({path, e.what()});
    return;
  }
  if (premises.size() != p.children.size()) {
    report.violations.push_back(
        {path, std::string(to_string(p.rule.tag)) + " expects " +
                   std::to_string(premises.size()) + " premises, node has " +
                   std::to_string(p.children.size())});
    return;
  }
  for (std::size_t i = 0; i < premises.size(); ++i) {
    if (!(p.children[i].sequent == premises[i])) {
      report.violations.push_back(
          {child_path(path, static_cast<int>(i)),
           "premise mismatch: expected '" + print_sequent(premises[i]) + "', found '" +
               print_sequent(p.children[i].sequent) + "'"});
      continue;
    }
    check_finite_node(p.children[i], system, child_path(path, static_cast<int>(i)), report);
  }
}

}  // namespace

FiniteProof make_node(Sequent sequent, RuleInstance rule, std::vector<FiniteProof> children) {
  return {std::move(sequent), std::move(rule), std::move(children)};
}

ValidationReport check_finite(const FiniteProof& p, System system) {
  ValidationReport report;
  if (!is_finitary(system)) {
    report.violations.push_back({"", "finite proof trees belong to the finitary systems"});
    return report;
  }
  check_finite_node(p, system, "", report);
  return report;
}

int count_cuts(const FiniteProof& p) {
  int n = p.rule.tag == RuleTag::Cut ? 1 : 0;
  for (const auto& c : p.children) n += count_cuts(c);
  return n;
}

int node_count(const FiniteProof& p) {
  int n = 1;
  for (const auto& c : p.children) n += node_count(c);
  return n;
}

int height(const FiniteProof& p) {
  int h = 0;
  for (const auto& c : p.children) h = std::max(h, 1 + height(c));
  return h;
}

namespace {

struct CyclicChecker {
  const CyclicProof& p;
  System system;
  CyclicCheckOptions opts;
  ValidationReport& report;
  std::vector<char> on_path;   // node index -> currently on DFS path
  std::vector<char> visited;   // tree-edge DFS visit marks

  void check_node(int idx, const std::string& path) {
    const CyclicNode& node = p.nodes[idx];
    if (visited[idx]) {
      report.violations.push_back({path, "node " + std::to_string(idx) +
                                             " is the tree child of two parents"});
      return;
    }
    visited[idx] = 1;
    on_path[idx] = 1;

    if (!node.rule.has_value()) {
      if (!opts.allow_holes)
        report.violations.push_back({path, "hole: node " + std::to_string(idx) +
                                               " carries no rule"});
      if (!node.children.empty())
        report.violations.push_back({path, "hole with children"});
      on_path[idx] = 0;
      return;
    }

    const RuleInstance& rule = *node.rule;
    do {
      if (!rule_allowed(rule, system)) {
        report.violations.push_back(
            {path, std::string(to_string(rule.tag)) + " is not a rule of " + to_string(system)});
        break;
      }
      std::vector<Sequent> premises;
      try {
        premises = premises_of(rule, node.sequent);
      } catch (const RuleError& e) {
        report.violations.push_back({path, e.what()});
        break;
      }
      if (premises.size() != node.children.size()) {
        report.violations.push_back(
            {path, std::string(to_string(rule.tag)) + " expects " +
                       std::to_string(premises.size()) + " premises, node has " +
                       std::to_string(node.children.size())});
        break;
      }
      for (std::size_t i = 0; i < premises.size(); ++i) {
        const CyclicChild& ch = node.children[i];
        std::string cp = child_path(path, static_cast<int>(i));
        if (ch.target < 0 || ch.target >= static_cast<int>(p.nodes.size())) {
          report.violations.push_back({cp, "child index out of range"});
          continue;
        }
        const Sequent& found = p.nodes[ch.target].sequent;
        if (!(found == premises[i])) {
          report.violations.push_back(
              {cp, "premise mismatch: expected '" + print_sequent(premises[i]) + "', found '" +
                       print_sequent(found) + "'"});
          continue;
        }
        if (ch.backedge) {
          if (!on_path[ch.target])
            report.violations.push_back(
                {cp, "back edge to node " + std::to_string(ch.target) +
                         " which is not a strict ancestor"});
        } else {
          check_node(ch.target, cp);
        }
      }
    } while (false);

    on_path[idx] = 0;
  }

  // Every cycle of the edge relation must cross the right premise of a box
  // rule: dropping those edges has to leave the graph acyclic.
  void check_trace_condition() {
    const int n = static_cast<int>(p.nodes.size());
    std::vector<char> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
    std::vector<int> cycle_witness;

    auto dfs = [&](auto&& self, int idx) -> bool {
      state[idx] = 1;
      const CyclicNode& node = p.nodes[idx];
      if (node.rule.has_value()) {
        for (std::size_t i = 0; i < node.children.size(); ++i) {
          if (node.rule->tag == RuleTag::BoxInf && i == 1) continue;
          int t = node.children[i].target;
          if (t < 0 || t >= n) continue;
          if (state[t] == 1) {
            cycle_witness.push_back(t);
            return false;
          }
          if (state[t] == 0 && !self(self, t)) return false;
        }
      }
      state[idx] = 2;
      return true;
    };

    for (int i = 0; i < n; ++i) {
      if (visited[i] && state[i] == 0 && !dfs(dfs, i)) {
        report.violations.push_back(
            {"", "cycle through node " + std::to_string(cycle_witness.front()) +
                     " avoids every box right premise"});
        return;
      }
    }
  }
};

}  // namespace

ValidationReport check_cyclic(const CyclicProof& p, System system, CyclicCheckOptions opts) {
  ValidationReport report;
  if (is_finitary(system)) {
    report.violations.push_back({"", "cyclic presentations belong to the non-well-founded systems"});
    return report;
  }
  if (p.nodes.empty()) {
    report.violations.push_back({"", "empty node table"});
    return report;
  }
  if (p.root < 0 || p.root >= static_cast<int>(p.nodes.size())) {
    report.violations.push_back({"", "root index out of range"});
    return report;
  }
  CyclicChecker checker{p, system, opts, report,
                        std::vector<char>(p.nodes.size(), 0),
                        std::vector<char>(p.nodes.size(), 0)};
  checker.check_node(p.root, "");
  checker.check_trace_condition();
  return report;
}

int count_cuts(const CyclicProof& p) {
  int n = 0;
  for (const auto& node : p.nodes)
    if (node.rule && node.rule->tag == RuleTag::Cut) ++n;
  return n;
}

int count_holes(const CyclicProof& p) {
  int n = 0;
  for (const auto& node : p.nodes)
    if (!node.rule) ++n;
  return n;
}

bool has_backedges(const CyclicProof& p) {
  for (const auto& node : p.nodes)
    for (const auto& ch : node.children)
      if (ch.backedge) return true;
  return false;
}

namespace {

FiniteProof to_finite_node(const CyclicProof& p, int idx, int depth_guard) {
  if (depth_guard > static_cast<int>(p.nodes.size()))
    throw Error("cyclic presentation is not a tree");
  const CyclicNode& node = p.nodes[idx];
  if (!node.rule) throw Error("cannot convert a hole to a finite proof node");
  FiniteProof out{node.sequent, *node.rule, {}};
  for (const auto& ch : node.children) {
    if (ch.backedge) throw Error("cannot convert a back edge to a finite proof node");
    out.children.push_back(to_finite_node(p, ch.target, depth_guard + 1));
  }
  return out;
}

int from_finite_node(const FiniteProof& p, CyclicProof& out) {
  int idx = static_cast<int>(out.nodes.size());
  out.nodes.push_back({p.sequent, p.rule, {}});
  for (const auto& c : p.children) {
    int t = from_finite_node(c, out);
    out.nodes[idx].children.push_back({false, t});
  }
  return idx;
}

}  // namespace

FiniteProof to_finite_proof(const CyclicProof& p) {
  if (p.nodes.empty()) throw Error("empty node table");
  return to_finite_node(p, p.root, 0);
}

CyclicProof from_finite_proof(const FiniteProof& p) {
  CyclicProof out;
  from_finite_node(p, out);
  out.root = 0;
  return out;
}

}  // namespace grz

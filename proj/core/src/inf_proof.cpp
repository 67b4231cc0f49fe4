#include "grz/inf_proof.hpp"

namespace grz {

InfProofPtr InfProof::child(int i) const {
  if (i < 0 || i >= child_count()) throw Error("child index out of range");
  std::lock_guard<std::mutex> lock(mu_);
  Cell& cell = cells_[static_cast<std::size_t>(i)];
  if (!cell.value) {
    InfThunk thunk = std::move(cell.thunk);
    cell.thunk = nullptr;
    cell.value = thunk();
    if (!cell.value) throw Error("child thunk produced no proof");
  }
  return cell.value;
}

InfProofPtr InfProof::leaf(Sequent sequent, RuleInstance rule, const char* provenance) {
  return node(std::move(sequent), std::move(rule), {}, provenance);
}

InfProofPtr InfProof::node(Sequent sequent, RuleInstance rule, std::vector<InfThunk> children,
                           const char* provenance) {
  auto p = std::shared_ptr<InfProof>(new InfProof());
  p->sequent_ = std::move(sequent);
  p->rule_ = std::move(rule);
  p->cells_.resize(children.size());
  for (std::size_t i = 0; i < children.size(); ++i) p->cells_[i].thunk = std::move(children[i]);
  p->provenance_ = provenance;
  return p;
}

InfProofPtr InfProof::node_now(Sequent sequent, RuleInstance rule,
                               std::vector<InfProofPtr> children, const char* provenance) {
  auto p = std::shared_ptr<InfProof>(new InfProof());
  p->sequent_ = std::move(sequent);
  p->rule_ = std::move(rule);
  p->cells_.resize(children.size());
  for (std::size_t i = 0; i < children.size(); ++i) p->cells_[i].value = std::move(children[i]);
  p->provenance_ = provenance;
  return p;
}

namespace {

InfProofPtr unfold_node(const std::shared_ptr<const CyclicProof>& graph, int idx) {
  const CyclicNode& node = graph->nodes[static_cast<std::size_t>(idx)];
  std::vector<InfThunk> kids;
  kids.reserve(node.children.size());
  for (const CyclicChild& ch : node.children)
    kids.push_back([graph, t = ch.target] { return unfold_node(graph, t); });
  return InfProof::node(node.sequent, *node.rule, std::move(kids), "cyclic");
}

}  // namespace

InfProofPtr unfold(const CyclicProof& p) {
  return unfold(std::make_shared<const CyclicProof>(p));
}

InfProofPtr unfold(std::shared_ptr<const CyclicProof> p) {
  ValidationReport report = check_cyclic(*p, System::GrzInfCut);
  if (!report.ok()) throw Error("invalid cyclic presentation: " + report.to_string());
  return unfold_node(p, p->root);
}

InfProofPtr from_finite(const FiniteProof& p, const char* provenance) {
  std::vector<InfProofPtr> kids;
  kids.reserve(p.children.size());
  for (const FiniteProof& c : p.children) kids.push_back(from_finite(c, provenance));
  return InfProof::node_now(p.sequent, p.rule, std::move(kids), provenance);
}

}  // namespace grz

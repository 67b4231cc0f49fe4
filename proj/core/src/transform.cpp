#include "grz/transform.hpp"

#include "grz/parse.hpp"

namespace grz {

namespace {

// One pass of the shared rewrite.  The edit is applied to every sequent of
// the main fragment; when the traced occurrence becomes principal the node
// is replaced by the indicated premise, which already proves the edited
// sequent.  Right box premises never contain the traced slots, so they are
// forwarded as they are.
struct ProofEdit {
  FormulaMultiset add_ant, del_ant, add_suc, del_suc;
  std::optional<RuleTag> splice_tag;
  FormulaRef splice_principal = nullptr;
  int splice_child = 0;
  const char* provenance = "edit";

  Sequent apply(const Sequent& s) const {
    return {s.antecedent.minus(del_ant).plus(add_ant),
            s.succedent.minus(del_suc).plus(add_suc)};
  }

  bool splices(const RuleInstance& rule) const {
    return splice_tag && rule.tag == *splice_tag && rule.principal == splice_principal;
  }
};

InfProofPtr edit_node(const InfProofPtr& p, const ProofEdit& e) {
  if (e.splices(p->rule())) return p->child(e.splice_child);
  Sequent edited = e.apply(p->sequent());
  std::vector<InfThunk> kids;
  kids.reserve(static_cast<std::size_t>(p->child_count()));
  for (int i = 0; i < p->child_count(); ++i) {
    if (p->rule().tag == RuleTag::BoxInf && i == 1)
      kids.push_back([p] { return p->child(1); });
    else
      kids.push_back([p, i, e] { return edit_node(p->child(i), e); });
  }
  return InfProof::node(std::move(edited), p->rule(), std::move(kids), e.provenance);
}

[[noreturn]] void shape_fail(const char* op, const std::string& why) {
  throw RuleError(std::string(op) + ": " + why);
}

void need_implication(const char* op, FormulaRef f) {
  if (f == nullptr || !f->is_implies()) shape_fail(op, "target is not an implication");
}

}  // namespace

InfProofPtr weaken(const InfProofPtr& p, const FormulaMultiset& pi,
                   const FormulaMultiset& sigma) {
  if (pi.empty() && sigma.empty()) return p;
  ProofEdit e;
  e.add_ant = pi;
  e.add_suc = sigma;
  e.provenance = "wk";
  return edit_node(p, e);
}

InfProofPtr invert_imp_left_l(const InfProofPtr& p, FormulaRef target) {
  need_implication("li_imp", target);
  if (!p->sequent().antecedent.contains(target))
    shape_fail("li_imp", "target " + print_formula(target) + " not in the antecedent");
  ProofEdit e;
  e.del_ant = FormulaMultiset::single(target);
  e.add_ant = FormulaMultiset::single(target->right());
  e.splice_tag = RuleTag::ImpL;
  e.splice_principal = target;
  e.splice_child = 0;
  e.provenance = "li_imp";
  return edit_node(p, e);
}

InfProofPtr invert_imp_left_r(const InfProofPtr& p, FormulaRef target) {
  need_implication("ri_imp", target);
  if (!p->sequent().antecedent.contains(target))
    shape_fail("ri_imp", "target " + print_formula(target) + " not in the antecedent");
  ProofEdit e;
  e.del_ant = FormulaMultiset::single(target);
  e.add_suc = FormulaMultiset::single(target->left());
  e.splice_tag = RuleTag::ImpL;
  e.splice_principal = target;
  e.splice_child = 1;
  e.provenance = "ri_imp";
  return edit_node(p, e);
}

InfProofPtr invert_imp_right(const InfProofPtr& p, FormulaRef target) {
  need_implication("inv_imp", target);
  if (!p->sequent().succedent.contains(target))
    shape_fail("inv_imp", "target " + print_formula(target) + " not in the succedent");
  ProofEdit e;
  e.del_suc = FormulaMultiset::single(target);
  e.add_ant = FormulaMultiset::single(target->left());
  e.add_suc = FormulaMultiset::single(target->right());
  e.splice_tag = RuleTag::ImpR;
  e.splice_principal = target;
  e.splice_child = 0;
  e.provenance = "inv_imp";
  return edit_node(p, e);
}

InfProofPtr invert_bot_right(const InfProofPtr& p) {
  if (!p->sequent().succedent.contains(Formula::bottom()))
    shape_fail("inv_bot", "bot not in the succedent");
  ProofEdit e;
  e.del_suc = FormulaMultiset::single(Formula::bottom());
  e.provenance = "inv_bot";
  return edit_node(p, e);
}

InfProofPtr invert_box_right(const InfProofPtr& p, FormulaRef target) {
  if (target == nullptr || !target->is_box()) shape_fail("li_box", "target is not a box formula");
  if (!p->sequent().succedent.contains(target))
    shape_fail("li_box", "target " + print_formula(target) + " not in the succedent");
  ProofEdit e;
  e.del_suc = FormulaMultiset::single(target);
  e.add_suc = FormulaMultiset::single(target->body());
  e.splice_tag = RuleTag::BoxInf;
  e.splice_principal = target;
  e.splice_child = 0;
  e.provenance = "li_box";
  return edit_node(p, e);
}

InfProofPtr contract_left(const InfProofPtr& p, FormulaRef atom) {
  if (atom == nullptr || !atom->is_atom()) shape_fail("acl", "target is not atomic");
  if (p->sequent().antecedent.count(atom) < 2)
    shape_fail("acl", "antecedent holds fewer than two copies of " + print_formula(atom));
  ProofEdit e;
  e.del_ant = FormulaMultiset::single(atom);
  e.provenance = "acl";
  return edit_node(p, e);
}

InfProofPtr contract_right(const InfProofPtr& p, FormulaRef atom) {
  if (atom == nullptr || !atom->is_atom()) shape_fail("acr", "target is not atomic");
  if (p->sequent().succedent.count(atom) < 2)
    shape_fail("acr", "succedent holds fewer than two copies of " + print_formula(atom));
  ProofEdit e;
  e.del_suc = FormulaMultiset::single(atom);
  e.provenance = "acr";
  return edit_node(p, e);
}

const char* to_string(TransformKind k) {
  switch (k) {
    case TransformKind::Weaken: return "wk";
    case TransformKind::InvImpLeftL: return "li_imp";
    case TransformKind::InvImpLeftR: return "ri_imp";
    case TransformKind::InvImpRight: return "inv_imp";
    case TransformKind::InvBotRight: return "inv_bot";
    case TransformKind::InvBoxRight: return "li_box";
    case TransformKind::ContractLeft: return "acl";
    case TransformKind::ContractRight: return "acr";
  }
  return "?";
}

std::optional<TransformKind> transform_kind_from_string(std::string_view name) {
  if (name == "wk") return TransformKind::Weaken;
  if (name == "li_imp") return TransformKind::InvImpLeftL;
  if (name == "ri_imp") return TransformKind::InvImpLeftR;
  if (name == "inv_imp") return TransformKind::InvImpRight;
  if (name == "inv_bot") return TransformKind::InvBotRight;
  if (name == "li_box") return TransformKind::InvBoxRight;
  if (name == "acl") return TransformKind::ContractLeft;
  if (name == "acr") return TransformKind::ContractRight;
  return std::nullopt;
}

InfProofPtr apply_transform(const InfProofPtr& p, const TransformSpec& spec) {
  switch (spec.kind) {
    case TransformKind::Weaken: return weaken(p, spec.pi, spec.sigma);
    case TransformKind::InvImpLeftL: return invert_imp_left_l(p, spec.target);
    case TransformKind::InvImpLeftR: return invert_imp_left_r(p, spec.target);
    case TransformKind::InvImpRight: return invert_imp_right(p, spec.target);
    case TransformKind::InvBotRight: return invert_bot_right(p);
    case TransformKind::InvBoxRight: return invert_box_right(p, spec.target);
    case TransformKind::ContractLeft: return contract_left(p, spec.target);
    case TransformKind::ContractRight: return contract_right(p, spec.target);
  }
  throw Error("unknown transform kind");
}

}  // namespace grz

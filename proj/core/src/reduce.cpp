#include "grz/reduce.hpp"

#include <optional>

#include "grz/parse.hpp"

namespace grz {

namespace {

InfProofPtr reduce_box_impl(FormulaRef bb, const InfProofPtr& l, const InfProofPtr& r,
                            Budget& budget);

// bot on the left or an atom shared by both sides.
std::optional<RuleInstance> initial_witness(const Sequent& s) {
  if (s.antecedent.contains(Formula::bottom())) return ax_bot();
  for (const auto& [f, c] : s.antecedent.items())
    if (f->is_atom() && s.succedent.contains(f)) return ax(f);  // least in the canonical order
  return std::nullopt;
}

InfProofPtr initial_leaf(Sequent s) {
  auto rule = initial_witness(s);
  if (!rule)
    throw RuleError("reduce: '" + print_sequent(s) + "' is not an initial sequent");
  return InfProof::leaf(std::move(s), std::move(*rule), "reduce:init");
}

InfThunk reuse_right(const InfProofPtr& p) {
  return [p] { return p->child(1); };
}

InfThunk ready(InfProofPtr p) {
  return [p = std::move(p)] { return p; };
}

// R_p, by induction on the local height of the left input.  The distinguished
// p is one succedent copy of l and one antecedent copy of r.
InfProofPtr reduce_atom_impl(FormulaRef p, const InfProofPtr& l, const InfProofPtr& r,
                             Budget& budget) {
  budget.tick();
  const Sequent target{l->sequent().antecedent, l->sequent().succedent.minus(p)};

  if (l->is_leaf()) {
    if (auto rule = initial_witness(target))
      return InfProof::leaf(target, std::move(*rule), "reduce:init");
    if (!target.antecedent.contains(p))
      throw RuleError("reduce: left premise is not an initial sequent");
    return contract_left(r, p);
  }

  const RuleInstance& rule = l->rule();
  switch (rule.tag) {
    case RuleTag::ImpR: {
      InfProofPtr sub =
          reduce_atom_impl(p, l->child(0), invert_imp_right(r, rule.principal), budget);
      return InfProof::node_now(target, rule, {sub}, "reduce:imp-r");
    }
    case RuleTag::ImpL: {
      InfProofPtr s0 =
          reduce_atom_impl(p, l->child(0), invert_imp_left_l(r, rule.principal), budget);
      InfProofPtr s1 =
          reduce_atom_impl(p, l->child(1), invert_imp_left_r(r, rule.principal), budget);
      return InfProof::node_now(target, rule, {s0, s1}, "reduce:imp-l");
    }
    case RuleTag::Refl: {
      InfProofPtr sub = reduce_atom_impl(
          p, l->child(0), weaken(r, FormulaMultiset::single(rule.principal->body()), {}),
          budget);
      return InfProof::node_now(target, rule, {sub}, "reduce:refl");
    }
    case RuleTag::BoxInf: {
      InfProofPtr sub =
          reduce_atom_impl(p, l->child(0), invert_box_right(r, rule.principal), budget);
      return InfProof::node(target, rule, {ready(sub), reuse_right(l)}, "reduce:box");
    }
    default:
      throw RuleError(std::string("reduce: unexpected ") + to_string(rule.tag) +
                      " in a cut-free main fragment");
  }
}

// The mirrored cases of R_[]: the left input ends in a box on the cut
// formula, the right input's last rule leaves its distinguished copy alone,
// so that rule is replayed below the pushed-up cut.
InfProofPtr reduce_box_mirror(FormulaRef bb, const InfProofPtr& l, const InfProofPtr& r,
                              Budget& budget) {
  const Sequent target{l->sequent().antecedent, r->sequent().succedent};
  const RuleInstance& rule = r->rule();
  switch (rule.tag) {
    case RuleTag::ImpR: {
      InfProofPtr sub =
          reduce_box_impl(bb, invert_imp_right(l, rule.principal), r->child(0), budget);
      return InfProof::node_now(target, rule, {sub}, "reduce:imp-r");
    }
    case RuleTag::ImpL: {
      InfProofPtr s0 =
          reduce_box_impl(bb, invert_imp_left_l(l, rule.principal), r->child(0), budget);
      InfProofPtr s1 =
          reduce_box_impl(bb, invert_imp_left_r(l, rule.principal), r->child(1), budget);
      return InfProof::node_now(target, rule, {s0, s1}, "reduce:imp-l");
    }
    case RuleTag::Refl: {
      InfProofPtr sub = reduce_box_impl(
          bb, weaken(l, FormulaMultiset::single(rule.principal->body()), {}), r->child(0),
          budget);
      return InfProof::node_now(target, rule, {sub}, "reduce:refl");
    }
    case RuleTag::BoxInf: {
      InfProofPtr sub =
          reduce_box_impl(bb, invert_box_right(l, rule.principal), r->child(0), budget);
      return InfProof::node(target, rule, {ready(sub), reuse_right(r)}, "reduce:box");
    }
    default:
      throw RuleError(std::string("reduce: unexpected ") + to_string(rule.tag) +
                      " in a cut-free main fragment");
  }
}

// R_[], by induction on the sum of the two local heights.
InfProofPtr reduce_box_impl(FormulaRef bb, const InfProofPtr& l, const InfProofPtr& r,
                            Budget& budget) {
  budget.tick();
  if (l->is_leaf() || r->is_leaf())
    return initial_leaf({l->sequent().antecedent, r->sequent().succedent});

  if (!(l->rule().tag == RuleTag::BoxInf && l->rule().principal == bb)) {
    // The left input's last rule leaves the distinguished []B in place, so
    // the four atom-style cases apply, recursing on the left height.
    const Sequent target{l->sequent().antecedent, r->sequent().succedent};
    const RuleInstance& rule = l->rule();
    switch (rule.tag) {
      case RuleTag::ImpR: {
        InfProofPtr sub =
            reduce_box_impl(bb, l->child(0), invert_imp_right(r, rule.principal), budget);
        return InfProof::node_now(target, rule, {sub}, "reduce:imp-r");
      }
      case RuleTag::ImpL: {
        InfProofPtr s0 =
            reduce_box_impl(bb, l->child(0), invert_imp_left_l(r, rule.principal), budget);
        InfProofPtr s1 =
            reduce_box_impl(bb, l->child(1), invert_imp_left_r(r, rule.principal), budget);
        return InfProof::node_now(target, rule, {s0, s1}, "reduce:imp-l");
      }
      case RuleTag::Refl: {
        InfProofPtr sub = reduce_box_impl(
            bb, l->child(0), weaken(r, FormulaMultiset::single(rule.principal->body()), {}),
            budget);
        return InfProof::node_now(target, rule, {sub}, "reduce:refl");
      }
      case RuleTag::BoxInf: {
        InfProofPtr sub =
            reduce_box_impl(bb, l->child(0), invert_box_right(r, rule.principal), budget);
        return InfProof::node(target, rule, {ready(sub), reuse_right(l)}, "reduce:box");
      }
      default:
        throw RuleError(std::string("reduce: unexpected ") + to_string(rule.tag) +
                        " in a cut-free main fragment");
    }
  }

  // l = Box_{[]B}(l0, l1) with modal context Theta, l1 proving Theta => B.
  FormulaRef b = bb->body();
  const FormulaMultiset& theta = l->rule().box_context;
  const RuleInstance& rrule = r->rule();

  if (rrule.tag == RuleTag::Refl && rrule.principal == bb) {
    // The right input peels the distinguished []B: push the cut past the
    // peeling, then cut the exposed body against the left box premise.
    InfProofPtr inner = reduce_box_impl(
        bb, weaken(l, FormulaMultiset::single(b), {}), r->child(0), budget);
    return reduce_unchecked(b, l->child(0), inner, budget);
  }

  if (rrule.tag == RuleTag::BoxInf &&
      r->sequent().antecedent.count(bb) - 1 < rrule.box_context.count(bb)) {
    // Every copy of the distinguished []B lies inside the right input's
    // modal context.  Merge the two modal contexts; the cut on []B survives,
    // but only behind the right premise of the emitted box.
    FormulaRef cc = rrule.principal;
    FormulaRef c = cc->body();
    const Sequent target{l->sequent().antecedent, r->sequent().succedent};
    FormulaMultiset xi = rrule.box_context.minus(bb).union_max(theta);
    FormulaMultiset grow = xi.minus(theta);

    InfProofPtr left_sub = reduce_box_impl(bb, invert_box_right(l, cc), r->child(0), budget);

    InfProofPtr l1 = l->child(1);
    InfProofPtr cut_left = InfProof::node(
        Sequent{xi, FormulaMultiset{c, bb}}, box_inf(bb, xi),
        {[l1, grow, c] { return weaken(l1, grow, FormulaMultiset::single(c)); },
         [l1, grow] { return weaken(l1, grow, {}); }},
        "reduce:case-b");
    InfProofPtr cut_right = weaken(r->child(1), xi.plus(bb).minus(rrule.box_context), {});
    InfProofPtr residual = InfProof::node_now(
        Sequent{xi, FormulaMultiset::single(c)}, cut(bb), {cut_left, cut_right},
        "reduce:case-b");

    return InfProof::node(target, box_inf(cc, xi), {ready(left_sub), ready(residual)},
                          "reduce:case-b");
  }

  return reduce_box_mirror(bb, l, r, budget);
}

}  // namespace

InfProofPtr reduce_unchecked(FormulaRef cut_formula, const InfProofPtr& left,
                             const InfProofPtr& right, Budget& budget) {
  switch (cut_formula->kind()) {
    case Connective::Bottom:
      return invert_bot_right(left);
    case Connective::Atom:
      return reduce_atom_impl(cut_formula, left, right, budget);
    case Connective::Implies: {
      FormulaRef b = cut_formula->left();
      FormulaRef c = cut_formula->right();
      InfProofPtr inner = reduce_unchecked(
          b, weaken(invert_imp_left_r(right, cut_formula), {}, FormulaMultiset::single(c)),
          invert_imp_right(left, cut_formula), budget);
      return reduce_unchecked(c, inner, invert_imp_left_l(right, cut_formula), budget);
    }
    case Connective::Box:
      return reduce_box_impl(cut_formula, left, right, budget);
  }
  throw Error("unknown connective");
}

InfProofPtr reduce(const ReductionRequest& req, Budget& budget) {
  if (req.cut_formula == nullptr) throw RuleError("reduce: missing cut formula");
  if (!req.left || !req.right) throw RuleError("reduce: missing premise");
  if (!req.left->sequent().succedent.contains(req.cut_formula))
    throw RuleError("reduce: cut formula not in the left succedent");
  if (!req.right->sequent().antecedent.contains(req.cut_formula))
    throw RuleError("reduce: cut formula not in the right antecedent");
  if (!(req.left->sequent().antecedent ==
        req.right->sequent().antecedent.minus(req.cut_formula)))
    throw RuleError("reduce: antecedents disagree: '" + print_sequent(req.left->sequent()) +
                    "' against '" + print_sequent(req.right->sequent()) + "'");
  if (!(req.right->sequent().succedent ==
        req.left->sequent().succedent.minus(req.cut_formula)))
    throw RuleError("reduce: succedents disagree: '" + print_sequent(req.left->sequent()) +
                    "' against '" + print_sequent(req.right->sequent()) + "'");
  if (!cut_free_to(req.left, 1, budget))
    throw RuleError("reduce: left premise has a cut in its main fragment");
  if (!cut_free_to(req.right, 1, budget))
    throw RuleError("reduce: right premise has a cut in its main fragment");
  return reduce_unchecked(req.cut_formula, req.left, req.right, budget);
}

InfProofPtr reduce(const ReductionRequest& req) {
  Budget budget;
  return reduce(req, budget);
}

}  // namespace grz

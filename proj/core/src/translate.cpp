#include "grz/translate.hpp"

#include "grz/parse.hpp"
#include "grz/transform.hpp"

namespace grz {

FiniteProof ax_expand(const FormulaMultiset& gamma, FormulaRef a,
                      const FormulaMultiset& delta) {
  Sequent concl{gamma.plus(a), delta.plus(a)};
  switch (a->kind()) {
    case Connective::Bottom:
      return {std::move(concl), ax_bot(), {}};
    case Connective::Atom:
      return {std::move(concl), ax(a), {}};
    case Connective::Implies: {
      FormulaRef b = a->left();
      FormulaRef c = a->right();
      FiniteProof lower = ax_expand(gamma.plus(b), c, delta);
      FiniteProof upper = ax_expand(gamma, b, delta.plus(c));
      FiniteProof mid{{gamma.plus(a).plus(b), delta.plus(c)},
                      imp_l(a),
                      {std::move(lower), std::move(upper)}};
      return {std::move(concl), imp_r(a), {std::move(mid)}};
    }
    case Connective::Box: {
      FormulaRef b = a->body();
      FiniteProof left = ax_expand(gamma.plus(a), b, delta);
      FiniteProof right_core = ax_expand(FormulaMultiset::single(a), b, {});
      FiniteProof right{{FormulaMultiset::single(a), FormulaMultiset::single(b)},
                        refl(a),
                        {std::move(right_core)}};
      FiniteProof mid{{gamma.plus(a).plus(b), delta.plus(a)},
                      box_inf(a, FormulaMultiset::single(a)),
                      {std::move(left), std::move(right)}};
      return {std::move(concl), refl(a), {std::move(mid)}};
    }
  }
  throw Error("unknown connective");
}

namespace {

// Append a finite tree to a node table, returning its root index.
int append_finite(CyclicProof& out, const FiniteProof& p) {
  int idx = static_cast<int>(out.nodes.size());
  out.nodes.push_back({p.sequent, p.rule, {}});
  for (const FiniteProof& c : p.children) {
    int t = append_finite(out, c);
    out.nodes[static_cast<std::size_t>(idx)].children.push_back({false, t});
  }
  return idx;
}

}  // namespace

CyclicProof grz_schema(FormulaRef a) {
  FormulaRef h = Formula::implies(a, Formula::box(a));   // A -> []A
  FormulaRef bh = Formula::box(h);                       // [](A -> []A)
  FormulaRef g = Formula::implies(bh, a);                // [](A -> []A) -> A
  FormulaRef f = Formula::box(g);
  FormulaMultiset fm = FormulaMultiset::single(f);

  CyclicProof out;
  out.nodes.resize(6);
  int ax0 = append_finite(out, ax_expand(fm, a, {}));
  int ax1 = append_finite(out, ax_expand(fm, a, FormulaMultiset::single(Formula::box(a))));
  int ax2 = append_finite(out, ax_expand(fm, a, {}));
  out.nodes[0] = {{fm, FormulaMultiset::single(a)}, refl(f), {{false, 1}}};
  out.nodes[1] = {{fm.plus(g), FormulaMultiset::single(a)}, imp_l(g), {{false, ax0}, {false, 2}}};
  out.nodes[2] = {{fm, FormulaMultiset{bh, a}}, box_inf(bh, fm), {{false, 3}, {false, 4}}};
  out.nodes[3] = {{fm, FormulaMultiset{h, a}}, imp_r(h), {{false, ax1}}};
  out.nodes[4] = {{fm, FormulaMultiset::single(h)}, imp_r(h), {{false, 5}}};
  out.nodes[5] = {{fm.plus(a), FormulaMultiset::single(Formula::box(a))},
                  box_inf(Formula::box(a), fm),
                  {{false, ax2}, {true, 0}}};
  out.root = 0;
  return out;
}

namespace {

InfProofPtr seq_to_inf_node(const FiniteProof& p) {
  const RuleInstance& rule = p.rule;
  switch (rule.tag) {
    case RuleTag::Ax: {
      if (rule.principal->is_atom()) return InfProof::leaf(p.sequent, rule, "embed");
      return from_finite(ax_expand(p.sequent.antecedent.minus(rule.principal), rule.principal,
                                   p.sequent.succedent.minus(rule.principal)),
                         "embed");
    }
    case RuleTag::AxBot:
      return InfProof::leaf(p.sequent, rule, "embed");
    case RuleTag::ImpL:
    case RuleTag::ImpR:
    case RuleTag::Refl:
    case RuleTag::Cut: {
      std::vector<InfProofPtr> kids;
      kids.reserve(p.children.size());
      for (const FiniteProof& c : p.children) kids.push_back(seq_to_inf_node(c));
      return InfProof::node_now(p.sequent, rule, std::move(kids), "embed");
    }
    case RuleTag::BoxGrz: {
      // Box the premise twice over, then cut against the schema proof of the
      // reflected box formula.
      FormulaRef a = rule.principal->body();
      FormulaRef h = Formula::implies(a, Formula::box(a));
      FormulaRef bh = Formula::box(h);
      FormulaRef g = Formula::implies(bh, a);
      FormulaRef f = Formula::box(g);
      const FormulaMultiset& pi = rule.box_context;
      FormulaMultiset sigma = p.sequent.antecedent.minus(pi);
      FormulaMultiset lambda = p.sequent.succedent.minus(rule.principal);

      InfProofPtr xi = seq_to_inf_node(p.children.front());  // pi, [](A -> []A) => A
      InfProofPtr xi2 = weaken(xi, {}, FormulaMultiset::single(a));
      InfProofPtr lg = InfProof::node_now({pi, FormulaMultiset{g, a}}, imp_r(g), {xi2}, "embed");
      InfProofPtr rg = InfProof::node_now({pi, FormulaMultiset::single(g)}, imp_r(g), {xi},
                                          "embed");
      InfProofPtr inner = InfProof::node_now({pi, FormulaMultiset{f, a}}, box_inf(f, pi),
                                             {lg, rg}, "embed");
      InfProofPtr theta = weaken(unfold(grz_schema(a)), pi, {});
      InfProofPtr lambda_proof = InfProof::node_now({pi, FormulaMultiset::single(a)}, cut(f),
                                                    {inner, theta}, "embed");
      InfProofPtr widened = weaken(lambda_proof, sigma, lambda);
      return InfProof::node_now(p.sequent, box_inf(rule.principal, pi),
                                {widened, lambda_proof}, "embed");
    }
    default:
      throw RuleError(std::string("embedding: unexpected ") + to_string(rule.tag) +
                      " in a finitary proof");
  }
}

}  // namespace

InfProofPtr seq_to_inf(const FiniteProof& p) { return seq_to_inf_node(p); }

namespace {

FiniteProof inf_to_seq_node(const InfProofPtr& p, FormulaSet lambda, Budget& budget) {
  budget.tick();
  FormulaMultiset ls = lambda_star(lambda);
  Sequent target{ls.plus(p->sequent().antecedent), p->sequent().succedent};
  const RuleInstance& rule = p->rule();
  switch (rule.tag) {
    case RuleTag::Ax:
    case RuleTag::AxBot:
      return {std::move(target), rule, {}};
    case RuleTag::ImpL:
    case RuleTag::ImpR:
    case RuleTag::Refl: {
      std::vector<FiniteProof> kids;
      kids.reserve(static_cast<std::size_t>(p->child_count()));
      for (int i = 0; i < p->child_count(); ++i)
        kids.push_back(inf_to_seq_node(p->child(i), lambda, budget));
      return {std::move(target), rule, std::move(kids)};
    }
    case RuleTag::BoxInf: {
      FormulaRef ba = rule.principal;
      FormulaRef a = ba->body();
      FormulaRef h = Formula::implies(a, Formula::box(a));
      FormulaRef bh = Formula::box(h);
      if (lambda.count(a)) {
        // The reflected formula is already tracked: replay its tracking
        // formula instead of descending behind the box again.
        FiniteProof q = inf_to_seq_node(p->child(0), lambda, budget);
        FiniteProof q2 = weak_seq(q, {}, FormulaMultiset::single(ba));
        Sequent mid{target.antecedent.plus(h), target.succedent};
        Sequent axs{target.antecedent.plus(ba), target.succedent};
        FiniteProof axleaf{std::move(axs), ax(ba), {}};
        FiniteProof split{std::move(mid), imp_l(h), {std::move(axleaf), std::move(q2)}};
        return {std::move(target), refl(bh), {std::move(split)}};
      }
      FormulaSet lambda2 = lambda;
      lambda2.insert(a);
      FiniteProof r = inf_to_seq_node(p->child(1), std::move(lambda2), budget);
      return {std::move(target), box_grz(ba, ls.plus(rule.box_context)), {std::move(r)}};
    }
    case RuleTag::Cut:
      throw RuleError("finitisation: the proof still has a cut at '" +
                      print_sequent(p->sequent()) + "'");
    default:
      throw RuleError(std::string("finitisation: unexpected ") + to_string(rule.tag));
  }
}

}  // namespace

FiniteProof inf_to_seq(const InfProofPtr& p, const FormulaSet& lambda, Budget& budget) {
  return inf_to_seq_node(p, lambda, budget);
}

FiniteProof inf_to_seq(const InfProofPtr& p) {
  Budget budget;
  return inf_to_seq_node(p, {}, budget);
}

FiniteProof weak_seq(const FiniteProof& p, const FormulaMultiset& pi,
                     const FormulaMultiset& sigma) {
  Sequent target{p.sequent.antecedent.plus(pi), p.sequent.succedent.plus(sigma)};
  switch (p.rule.tag) {
    case RuleTag::Ax:
    case RuleTag::AxBot:
      return {std::move(target), p.rule, {}};
    case RuleTag::ImpL:
    case RuleTag::ImpR:
    case RuleTag::Refl:
    case RuleTag::Cut: {
      std::vector<FiniteProof> kids;
      kids.reserve(p.children.size());
      for (const FiniteProof& c : p.children) kids.push_back(weak_seq(c, pi, sigma));
      return {std::move(target), p.rule, std::move(kids)};
    }
    case RuleTag::BoxGrz:
      // The premise mentions neither context slot.
      return {std::move(target), p.rule, p.children};
    case RuleTag::BoxInf: {
      std::vector<FiniteProof> kids;
      kids.push_back(weak_seq(p.children[0], pi, sigma));
      kids.push_back(p.children[1]);
      return {std::move(target), p.rule, std::move(kids)};
    }
  }
  throw Error("unknown rule tag");
}

FiniteProof eliminate_finitary(const FiniteProof& p, Budget& budget) {
  ValidationReport report = check_finite(p, System::GrzSeqCut);
  if (!report.ok()) throw Error("cut elimination input is invalid: " + report.to_string());
  return inf_to_seq(eliminate(seq_to_inf(p)), {}, budget);
}

FiniteProof eliminate_finitary(const FiniteProof& p) {
  Budget budget;
  return eliminate_finitary(p, budget);
}

}  // namespace grz

// End-to-end acceptance checks, one line of output per criterion.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "grz/proof_io.hpp"
#include "testutil.hpp"

using namespace grz;
using grztest::fm;
using grztest::fms;
using grztest::seq;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  long ms = 0;
};

std::ostringstream whine;

void expect(bool ok, const std::string& what) {
  if (!ok) whine << "; " << what;
}

// ---- 1: the bundled schema proof ----------------------------------------

Fragment hole_at(const Sequent& s) { return {s, std::nullopt, {}}; }

Fragment pinned_main_fragment() {
  FormulaRef p = fm("p");
  FormulaRef h = fm("p -> []p");
  FormulaRef bh = fm("[](p -> []p)");
  FormulaRef g = fm("[](p -> []p) -> p");
  FormulaRef f = fm("[]([](p -> []p) -> p)");

  Fragment ax0{{{f, p}, {p}}, ax(p), {}};
  Fragment ax1{{{f, p}, {p, Formula::box(p)}}, ax(p), {}};
  Fragment n3{{{f}, {h, p}}, imp_r(h), {ax1}};
  Fragment n2{{{f}, {bh, p}},
              box_inf(bh, FormulaMultiset::single(f)),
              {n3, hole_at({{f}, {h}})}};
  Fragment n1{{{f, g}, {p}}, imp_l(g), {ax0, n2}};
  return Fragment{{{f}, {p}}, refl(f), {n1}};
}

bool criterion1(const std::string& data_path) {
  ProofFile pf = load_proof(data_path);
  expect(pf.system == System::GrzInf, "bundled file is not tagged grz-inf");
  expect(check_cyclic(pf.proof, System::GrzInf).ok(), "bundled proof is invalid");

  CyclicProof fresh = grz_schema(fm("p"));
  bool same = pf.proof.root == fresh.root && pf.proof.nodes.size() == fresh.nodes.size();
  for (std::size_t i = 0; same && i < fresh.nodes.size(); ++i)
    same = pf.proof.nodes[i].sequent == fresh.nodes[i].sequent &&
           pf.proof.nodes[i].rule == fresh.nodes[i].rule &&
           pf.proof.nodes[i].children == fresh.nodes[i].children;
  expect(same, "bundled file drifted from the generator");

  InfProofPtr u = unfold(pf.proof);
  expect(local_height(u) == 4, "local height is not 4");
  expect(main_fragment(u) == pinned_main_fragment(), "main fragment deviates from the figure");
  return whine.str().empty();
}

// ---- 2: schema instances and their finitisations ------------------------

bool criterion2() {
  std::vector<std::string> texts = {
      "p",      "q",        "bot",     "bot -> bot", "p -> q",  "q -> p",   "p -> bot",
      "[]p",    "[]q",      "[]bot",   "[](p -> q)", "[][]p",   "p -> []q", "[]p -> q",
      "[][]q",  "[]p -> []q", "[](q -> []q)", "[]q -> bot", "[][]bot", "[](p -> q) -> p"};
  expect(texts.size() == 20, "instance list went missing");
  for (const auto& t : texts) {
    FormulaRef a = fm(t);
    expect(a->modal_depth() <= 3, "instance too deep: " + t);
    CyclicProof g = grz_schema(a);
    if (!check_cyclic(g, System::GrzInf).ok()) {
      expect(false, "schema proof invalid for " + t);
      continue;
    }
    FiniteProof fin = inf_to_seq(unfold(g));
    expect(check_finite(fin, System::GrzSeq).ok(), "finitisation invalid for " + t);
    expect(fin.sequent == g.nodes[static_cast<std::size_t>(g.root)].sequent,
           "finitisation changed the endsequent for " + t);
  }
  return whine.str().empty();
}

// ---- 3: elimination across a corpus -------------------------------------

bool criterion3() {
  std::mt19937 rng(101);
  auto corpus = grztest::cut_corpus(rng, 50);
  expect(corpus.size() >= 50, "corpus too small");
  int idx = 0;
  for (const auto& p : corpus) {
    InfProofPtr out = eliminate(p);
    bool ok = out->sequent() == p->sequent() && cut_free_to(out, 8) &&
              check_level(out, System::GrzInf, 8).ok();
    expect(ok, "elimination failed on corpus item " + std::to_string(idx));
    ++idx;
  }
  return whine.str().empty();
}

// ---- 4: iterates against the fixed point --------------------------------

bool criterion4() {
  std::mt19937 rng(103);
  auto corpus = grztest::cut_corpus(rng, 8);
  int idx = 0;
  for (const auto& p : corpus) {
    InfProofPtr limit = eliminate(p);
    for (int n = 1; n <= 6; ++n) {
      InfProofPtr approx = iterate(n, p);
      expect(sim_level(limit, approx, n),
             "iterate " + std::to_string(n) + " disagrees with the limit on item " +
                 std::to_string(idx));
      if (n <= 5)
        expect(distance(approx, iterate(n + 1, p), 8).exponent >= n,
               "iterates " + std::to_string(n) + "," + std::to_string(n + 1) +
                   " too far apart on item " + std::to_string(idx));
    }
    ++idx;
  }
  return whine.str().empty();
}

// ---- 5: finitary pipeline ------------------------------------------------

bool criterion5() {
  std::mt19937 rng(107);
  auto bases = grztest::finitary_corpus(0);
  std::vector<FiniteProof> inputs;
  for (const auto& b : bases) {
    inputs.push_back(grztest::insert_cut(b, grztest::random_formula(rng, 2)));
    inputs.push_back(grztest::insert_cut(b, grztest::random_formula(rng, 1)));
  }
  expect(inputs.size() >= 20, "corpus too small");
  int idx = 0;
  for (const auto& in : inputs) {
    expect(count_cuts(in) >= 1, "input lost its cut");
    FiniteProof out = eliminate_finitary(in);
    bool ok = out.sequent == in.sequent && count_cuts(out) == 0 &&
              check_finite(out, System::GrzSeq).ok();
    expect(ok, "pipeline failed on input " + std::to_string(idx));
    ++idx;
  }
  return whine.str().empty();
}

// ---- 6: the transformer family -------------------------------------------

std::vector<std::pair<InfProofPtr, TransformSpec>> family_inputs(std::mt19937& rng, int rounds) {
  std::vector<std::pair<InfProofPtr, TransformSpec>> out;
  auto bases = grztest::inf_corpus(rng, 12);
  bases.push_back(grztest::wrap_cut(grztest::tower(2, false), fm("q")));
  bases.push_back(grztest::cut_tower(3, 1, fm("p")));
  for (int i = 0; i < rounds; ++i) {
    const InfProofPtr& base = bases[static_cast<std::size_t>(i) % bases.size()];
    FormulaRef extra = grztest::random_formula(rng, 2);
    FormulaRef impf = Formula::implies(extra, fm("w"));
    FormulaRef boxf = Formula::box(Formula::implies(fm("w"), extra));

    out.push_back({base, {TransformKind::Weaken, FormulaMultiset::single(extra),
                          FormulaMultiset::single(fm("w")), nullptr}});
    InfProofPtr wl = weaken(base, FormulaMultiset::single(impf), {});
    out.push_back({wl, {TransformKind::InvImpLeftL, {}, {}, impf}});
    out.push_back({wl, {TransformKind::InvImpLeftR, {}, {}, impf}});
    out.push_back({weaken(base, {}, FormulaMultiset::single(impf)),
                   {TransformKind::InvImpRight, {}, {}, impf}});
    out.push_back({weaken(base, {}, FormulaMultiset::single(fm("bot"))),
                   {TransformKind::InvBotRight, {}, {}, nullptr}});
    out.push_back({weaken(base, {}, FormulaMultiset::single(boxf)),
                   {TransformKind::InvBoxRight, {}, {}, boxf}});
    out.push_back({weaken(base, fms("w, w"), {}), {TransformKind::ContractLeft, {}, {}, fm("w")}});
    out.push_back({weaken(base, {}, fms("w, w")), {TransformKind::ContractRight, {}, {}, fm("w")}});
  }
  return out;
}

Sequent transformed_root(const Sequent& s, const TransformSpec& spec) {
  switch (spec.kind) {
    case TransformKind::Weaken:
      return {s.antecedent.plus(spec.pi), s.succedent.plus(spec.sigma)};
    case TransformKind::InvImpLeftL:
      return {s.antecedent.minus(spec.target).plus(spec.target->right()), s.succedent};
    case TransformKind::InvImpLeftR:
      return {s.antecedent.minus(spec.target), s.succedent.plus(spec.target->left())};
    case TransformKind::InvImpRight:
      return {s.antecedent.plus(spec.target->left()),
              s.succedent.minus(spec.target).plus(spec.target->right())};
    case TransformKind::InvBotRight:
      return {s.antecedent, s.succedent.minus(Formula::bottom())};
    case TransformKind::InvBoxRight:
      return {s.antecedent, s.succedent.minus(spec.target).plus(spec.target->body())};
    case TransformKind::ContractLeft:
      return {s.antecedent.minus(spec.target), s.succedent};
    case TransformKind::ContractRight:
      return {s.antecedent, s.succedent.minus(spec.target)};
  }
  throw Error("unknown transform kind");
}

bool criterion6() {
  std::mt19937 rng(109);
  auto pairs = family_inputs(rng, 100);  // one hundred per kind
  int idx = 0;
  for (const auto& [p, spec] : pairs) {
    InfProofPtr out = apply_transform(p, spec);
    bool ok = out->sequent() == transformed_root(p->sequent(), spec) &&
              local_height(out) <= local_height(p) &&
              cut_free_to(out, 1) == cut_free_to(p, 1);
    expect(ok, std::string(to_string(spec.kind)) + " broke its contract on input " +
                   std::to_string(idx));
    ++idx;
  }

  // nonexpansiveness, sampled on same-spec application pairs
  int sampled = 0;
  for (std::size_t i = 0; i < pairs.size() && sampled < 24; ++i)
    for (std::size_t j = i + 8; j < pairs.size() && sampled < 24; j += 8) {
      const auto& [pi, si] = pairs[i];
      const auto& [pj, sj] = pairs[j];
      if (!(si.kind == sj.kind && si.pi == sj.pi && si.sigma == sj.sigma &&
            si.target == sj.target))
        continue;
      ++sampled;
      for (int n = 0; n <= 5; ++n)
        if (sim_level(pi, pj, n))
          expect(sim_level(apply_transform(pi, si), apply_transform(pj, sj), n),
                 std::string(to_string(si.kind)) + " expanded a level " + std::to_string(n) +
                     " agreement");
    }
  expect(sampled >= 12, "not enough comparable pairs sampled");
  return whine.str().empty();
}

// ---- 7: the reducing maps -------------------------------------------------

bool criterion7() {
  std::mt19937 rng(113);
  auto bases = grztest::inf_corpus(rng, 10);
  int idx = 0;
  for (int i = 0; i < 100; ++i) {
    const InfProofPtr& base = bases[static_cast<std::size_t>(i) % bases.size()];
    FormulaRef a = grztest::random_formula(rng, 2);
    ReductionRequest req{a, weaken(base, {}, FormulaMultiset::single(a)),
                         weaken(base, FormulaMultiset::single(a), {})};
    InfProofPtr out = reduce(req);
    bool ok = out->sequent() == base->sequent() && cut_free_to(out, 1) &&
              check_level(out, System::GrzInfCut, 2).ok();
    expect(ok, "reduction " + std::to_string(idx) + " broke its contract");
    ++idx;
  }

  // whose distinguished copies hide inside the right modal context: the
  // residual cut must sit exactly one crossing deep
  auto basep = [](const std::string& concl, const std::string& up) {
    return InfProof::node_now(seq(concl), refl(fm("[]p")),
                              {InfProof::leaf(seq(up), ax(fm("p")), "test")}, "test");
  };
  InfProofPtr l = InfProof::node_now(
      seq("[]p => []p, []p"), box_inf(fm("[]p"), fms("[]p")),
      {basep("[]p => p, []p", "p, []p => p, []p"), basep("[]p => p", "p, []p => p")}, "test");
  InfProofPtr r = InfProof::node_now(
      seq("[]p, []p => []p"), box_inf(fm("[]p"), fms("[]p, []p")),
      {basep("[]p, []p => p", "p, []p, []p => p"), basep("[]p, []p => p", "p, []p, []p => p")},
      "test");
  InfProofPtr out = reduce({fm("[]p"), l, r});
  expect(out->sequent() == seq("[]p => []p"), "context merging changed the endsequent");
  expect(cut_free_to(out, 1), "context merging left a cut in the main fragment");
  expect(!cut_free_to(out, 2), "the residual cut vanished");
  expect(check_level(out, System::GrzInfCut, 3).ok(), "context merging output invalid");
  return whine.str().empty();
}

// ---- 8: the metric --------------------------------------------------------

bool criterion8() {
  std::mt19937 rng(127);
  auto pool = grztest::inf_corpus(rng, 8);
  auto cuts = grztest::cut_corpus(rng, 6);

  for (const auto& p : pool) {
    expect(sim_level(p, p, 6), "similarity is not reflexive");
    Distance self = distance(p, p, 6);
    expect(!self.exact && self.exponent == 6, "self distance not bounded by the horizon");
  }
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      Distance a = distance(pool[i], pool[j], 6);
      Distance b = distance(pool[j], pool[i], 6);
      expect(a.exponent == b.exponent && a.exact == b.exact, "distance is not symmetric");
    }

  std::vector<InfProofPtr> fam;
  for (int j = 1; j <= 4; ++j) fam.push_back(grztest::marked_tower(6, j));
  for (const auto& x : fam)
    for (const auto& y : fam)
      for (const auto& z : fam) {
        int dxz = distance(x, z, 8).exponent;
        int dxy = distance(x, y, 8).exponent;
        int dyz = distance(y, z, 8).exponent;
        expect(dxz >= std::min(dxy, dyz), "ultrametric inequality failed");
      }

  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j)
      for (int n = 5; n >= 1; --n)
        if (sim_level(pool[i], pool[j], n))
          expect(sim_level(pool[i], pool[j], n - 1), "similarity is not monotone");

  for (const auto& p : cuts)
    for (int n = 4; n >= 1; --n)
      if (cut_free_to(p, n)) expect(cut_free_to(p, n - 1), "cut rank classes are not nested");
  for (int j = 0; j <= 3; ++j) {
    InfProofPtr p = grztest::cut_tower(4, j, fm("q"));
    for (int n = 0; n <= 4; ++n)
      expect(cut_free_to(p, n) == (n <= j), "cut rank observation misplaced a cut");
  }
  return whine.str().empty();
}

// ---- 9: provability of the axiom schemata ---------------------------------

bool criterion9() {
  auto goals = grztest::hilbert_instances(grztest::instantiation_set());
  expect(goals.size() == 104, "instantiation produced " + std::to_string(goals.size()) +
                                  " goals instead of 104");
  int idx = 0;
  for (FormulaRef g : goals) {
    Sequent target{{}, FormulaMultiset::single(g)};
    auto res = prove_seq(target, {});
    bool ok = res.verdict == Verdict::Proved && res.finite.has_value() &&
              res.finite->sequent == target && check_finite(*res.finite, System::GrzSeq).ok();
    expect(ok, "goal " + std::to_string(idx) + " (" + print_formula(g) + ") not settled");
    ++idx;
  }
  return whine.str().empty();
}

// ---- 10: mutation rejection ------------------------------------------------

struct Mutant {
  CyclicProof proof;
  System system;
  int victim;  // node index the mutation touched
};

bool resolves(const CyclicProof& p, const std::string& path) {
  int at = p.root;
  if (path.empty()) return true;
  std::istringstream in(path);
  std::string part;
  while (std::getline(in, part, '.')) {
    const CyclicNode& node = p.nodes[static_cast<std::size_t>(at)];
    std::size_t i = static_cast<std::size_t>(std::stoul(part));
    if (i >= node.children.size()) return false;
    int t = node.children[i].target;
    if (t < 0 || t >= static_cast<int>(p.nodes.size())) return false;
    at = t;
  }
  return true;
}

RuleTag flipped(RuleTag t) {
  switch (t) {
    case RuleTag::Ax: return RuleTag::Refl;
    case RuleTag::ImpL: return RuleTag::ImpR;
    case RuleTag::ImpR: return RuleTag::ImpL;
    case RuleTag::Refl: return RuleTag::ImpL;
    case RuleTag::BoxInf: return RuleTag::Refl;
    case RuleTag::BoxGrz: return RuleTag::Refl;
    case RuleTag::Cut: return RuleTag::ImpL;
    case RuleTag::AxBot: return RuleTag::AxBot;  // never picked
  }
  return RuleTag::Refl;
}

std::optional<Mutant> mutate(const CyclicProof& base, System system, std::mt19937& rng) {
  Mutant m{base, system, 0};
  std::uniform_int_distribution<int> kind_pick(0, 2);
  int kind = kind_pick(rng);
  const int n = static_cast<int>(base.nodes.size());

  if (kind == 0) {
    std::vector<std::pair<int, int>> backs;
    for (int i = 0; i < n; ++i)
      for (std::size_t c = 0; c < base.nodes[static_cast<std::size_t>(i)].children.size(); ++c)
        if (base.nodes[static_cast<std::size_t>(i)].children[c].backedge)
          backs.push_back({i, static_cast<int>(c)});
    if (backs.empty() || n < 2) return std::nullopt;
    auto [ni, ci] = backs[std::uniform_int_distribution<std::size_t>(0, backs.size() - 1)(rng)];
    CyclicChild& ch = m.proof.nodes[static_cast<std::size_t>(ni)].children[static_cast<std::size_t>(ci)];
    ch.target = (ch.target + 1 + std::uniform_int_distribution<int>(0, n - 2)(rng)) % n;
    m.victim = ni;
    return m;
  }

  if (kind == 1) {
    std::vector<int> eligible;
    for (int i = 0; i < n; ++i) {
      const auto& r = base.nodes[static_cast<std::size_t>(i)].rule;
      if (r.has_value() && r->tag != RuleTag::AxBot) eligible.push_back(i);
    }
    if (eligible.empty()) return std::nullopt;
    int ni = eligible[std::uniform_int_distribution<std::size_t>(0, eligible.size() - 1)(rng)];
    RuleInstance& r = *m.proof.nodes[static_cast<std::size_t>(ni)].rule;
    r.tag = flipped(r.tag);
    m.victim = ni;
    return m;
  }

  if (n < 2) return std::nullopt;
  int ni = std::uniform_int_distribution<int>(1, n - 1)(rng);  // never the root
  CyclicNode& node = m.proof.nodes[static_cast<std::size_t>(ni)];
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0)
    node.sequent.antecedent = node.sequent.antecedent.plus(fm("zz"));
  else
    node.sequent.succedent = node.sequent.succedent.plus(fm("zz"));
  m.victim = ni;
  return m;
}

bool criterion10() {
  std::vector<std::pair<CyclicProof, System>> pool;
  for (const char* t : {"p", "q", "[]p", "p -> q"})
    pool.push_back({grz_schema(fm(t)), System::GrzInf});
  for (const char* g : {"[]p => []p", "[]p => [][]p", "=> [] ( [] (p -> [] p) -> p ) -> p"}) {
    auto res = prove_inf(seq(g), {});
    if (res.verdict == Verdict::Proved) pool.push_back({*res.cyclic, System::GrzInf});
  }
  for (const char* g : {"=> [](p -> q) -> []p -> []q", "=> ((p -> bot) -> bot) -> p"}) {
    auto res = prove_seq(seq(g), {});
    if (res.verdict == Verdict::Proved)
      pool.push_back({from_finite_proof(*res.finite), System::GrzSeq});
  }
  expect(pool.size() >= 7, "mutation pool went missing");

  std::mt19937 rng(131);
  int made = 0, rejected = 0, localized = 0;
  while (made < 200) {
    const auto& [base, system] = pool[static_cast<std::size_t>(made) % pool.size()];
    auto m = mutate(base, system, rng);
    if (!m) continue;
    ++made;
    ValidationReport report = is_finitary(m->system)
                                  ? check_finite(to_finite_proof(m->proof), m->system)
                                  : check_cyclic(m->proof, m->system);
    if (report.ok()) continue;
    ++rejected;
    bool pin = false;
    for (const auto& v : report.violations)
      pin = pin || (!v.message.empty() && resolves(m->proof, v.path));
    if (pin) ++localized;
  }
  expect(rejected >= 190, "only " + std::to_string(rejected) + " of 200 mutants rejected");
  expect(localized == rejected,
         std::to_string(rejected - localized) + " rejections carried no usable location");
  return whine.str().empty();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <schema-proof.json>\n", argv[0]);
    return 2;
  }
  const std::string data_path = argv[1];

  struct Item {
    const char* label;
    long budget_ms;  // 0 means no cap
    std::function<bool()> run;
  };
  const std::vector<Item> items = {
      {"bundled schema proof: valid, height 4, pinned main fragment", 1000,
       [&] { return criterion1(data_path); }},
      {"schema instances build and finitise for 20 formulas", 10000, criterion2},
      {"lazy cut elimination clears 50 proofs to level 8", 60000, criterion3},
      {"iterates converge to the elimination fixed point", 0, criterion4},
      {"finitary pipeline strips cuts from 20 tree proofs", 60000, criterion5},
      {"transformer family honours its contracts", 0, criterion6},
      {"reducing maps settle 100 cuts and localise residuals", 0, criterion7},
      {"the proof metric behaves like an ultrametric", 0, criterion8},
      {"search settles all 104 axiom instances", 30000, criterion9},
      {"mutation screening rejects 200 corrupted proofs", 0, criterion10},
  };

  int failures = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    Outcome out;
    whine.str("");
    auto t0 = std::chrono::steady_clock::now();
    try {
      out.pass = items[i].run();
    } catch (const std::exception& e) {
      out.pass = false;
      whine << "; exception: " << e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    out.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    if (items[i].budget_ms > 0 && out.ms > items[i].budget_ms) {
      out.pass = false;
      whine << "; over time budget of " << items[i].budget_ms << " ms";
    }
    out.detail = whine.str();
    if (!out.pass) ++failures;
    std::printf("%s %2zu. %s (%ld ms)%s\n", out.pass ? "PASS" : "FAIL", i + 1, items[i].label,
                out.ms, out.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}

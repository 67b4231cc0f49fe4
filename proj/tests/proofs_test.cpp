#include "doctest.h"
#include "testutil.hpp"

using namespace grz;
using grztest::fm;
using grztest::fms;
using grztest::seq;

namespace {

FiniteProof leaf(const std::string& s, RuleInstance r) {
  return make_node(seq(s), r, {});
}

// [](p -> q), []p => []q in the finitary system.
FiniteProof distribution_proof() {
  FiniteProof axq = leaf("[](p -> q), []p, [](q -> []q), q, p => q", ax(fm("q")));
  FiniteProof axp = leaf("[](p -> q), []p, [](q -> []q), p => p, q", ax(fm("p")));
  FiniteProof il = make_node(seq("[](p -> q), []p, [](q -> []q), p -> q, p => q"),
                             imp_l(fm("p -> q")), {axq, axp});
  FiniteProof r2 = make_node(seq("[](p -> q), []p, [](q -> []q), p => q"),
                             refl(fm("[](p -> q)")), {il});
  FiniteProof r1 = make_node(seq("[](p -> q), []p, [](q -> []q) => q"),
                             refl(fm("[]p")), {r2});
  return make_node(seq("[](p -> q), []p => []q"),
                   box_grz(fm("[]q"), fms("[](p -> q), []p")), {r1});
}

}  // namespace

TEST_CASE("valid finite proofs pass") {
  FiniteProof p = distribution_proof();
  CHECK(check_finite(p, System::GrzSeq).ok());
  CHECK(check_finite(p, System::GrzSeqCut).ok());
  CHECK(node_count(p) == 6);
  CHECK(height(p) == 4);
  CHECK(count_cuts(p) == 0);
}

TEST_CASE("premise mismatches are reported with a path") {
  FiniteProof bad = make_node(seq("p, q => p"), ax(fm("p")),
                              {leaf("p => p", ax(fm("p")))});
  auto report = check_finite(bad, System::GrzSeq);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations[0].path == "");

  FiniteProof inner = make_node(seq("p => q -> q"), imp_r(fm("q -> q")),
                                {leaf("q, p => p", ax(fm("p")))});
  report = check_finite(inner, System::GrzSeq);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations[0].path == "0");
  CHECK(report.violations[0].message.find("expected") != std::string::npos);
}

TEST_CASE("rules from the wrong system are flagged") {
  FiniteProof p = distribution_proof();
  CHECK_FALSE(check_finite(p, System::GrzInf).ok());

  FiniteProof c = grztest::insert_cut(leaf("p => p", ax(fm("p"))), fm("q"));
  CHECK(check_finite(c, System::GrzSeqCut).ok());
  CHECK_FALSE(check_finite(c, System::GrzSeq).ok());
  CHECK(count_cuts(c) == 1);
}

TEST_CASE("compound axioms are finitary only") {
  FiniteProof p = leaf("p -> q => p -> q", ax(fm("p -> q")));
  CHECK(check_finite(p, System::GrzSeq).ok());
  CHECK_FALSE(check_cyclic(from_finite_proof(p), System::GrzInf).ok());
}

// The reflected box sequent for q, with the regenerated right premise of the
// inner box rule looping back to the root.
static CyclicProof reflected_box_loop() {
  FormulaRef h = fm("q -> []q");
  FormulaRef bh = fm("[](q -> []q)");
  FormulaRef g = fm("[](q -> []q) -> q");
  FormulaRef f = fm("[]([](q -> []q) -> q)");
  CyclicProof out;
  out.nodes.resize(9);
  out.nodes[0] = {seq("[]([](q -> []q) -> q) => q"), refl(f), {{false, 1}}};
  out.nodes[1] = {seq("[]([](q -> []q) -> q), [](q -> []q) -> q => q"), imp_l(g),
                  {{false, 6}, {false, 2}}};
  out.nodes[2] = {seq("[]([](q -> []q) -> q) => [](q -> []q), q"),
                  box_inf(bh, FormulaMultiset::single(f)), {{false, 3}, {false, 4}}};
  out.nodes[3] = {seq("[]([](q -> []q) -> q) => q -> []q, q"), imp_r(h), {{false, 7}}};
  out.nodes[4] = {seq("[]([](q -> []q) -> q) => q -> []q"), imp_r(h), {{false, 5}}};
  out.nodes[5] = {seq("[]([](q -> []q) -> q), q => []q"),
                  box_inf(fm("[]q"), FormulaMultiset::single(f)), {{false, 8}, {true, 0}}};
  out.nodes[6] = {seq("[]([](q -> []q) -> q), q => q"), ax(fm("q")), {}};
  out.nodes[7] = {seq("[]([](q -> []q) -> q), q => q, []q"), ax(fm("q")), {}};
  out.nodes[8] = {seq("[]([](q -> []q) -> q), q => q"), ax(fm("q")), {}};
  return out;
}

TEST_CASE("hand built cyclic proof of the reflected box sequent") {
  CyclicProof g = reflected_box_loop();
  CHECK(check_cyclic(g, System::GrzInf).ok());
  CHECK(has_backedges(g));
  CHECK(count_holes(g) == 0);
  CHECK(count_cuts(g) == 0);
}

TEST_CASE("back edges must hit matching strict ancestors") {
  CyclicProof g = reflected_box_loop();
  g.nodes[5].children[1] = {true, 4};  // ancestor, but the wrong sequent
  auto mismatch = check_cyclic(g, System::GrzInf);
  REQUIRE_FALSE(mismatch.ok());
  CHECK(mismatch.violations[0].message.find("premise mismatch") != std::string::npos);

  CyclicProof h;
  h.nodes.resize(3);
  h.nodes[0] = {seq("[]p => []p"), box_inf(fm("[]p"), fms("[]p")),
                {{false, 1}, {true, 1}}};
  h.nodes[1] = {seq("[]p => p"), refl(fm("[]p")), {{false, 2}}};
  h.nodes[2] = {seq("p, []p => p"), ax(fm("p")), {}};
  auto sideways = check_cyclic(h, System::GrzInf);  // matches, but points at a sibling
  REQUIRE_FALSE(sideways.ok());
  CHECK(sideways.violations[0].message.find("strict ancestor") != std::string::npos);
}

TEST_CASE("cycles that avoid box right premises are rejected") {
  // p -> p => with the left implication premise looping to itself.
  CyclicProof g;
  g.nodes.resize(1);
  g.nodes[0] = {seq("p -> p =>"), imp_l(fm("p -> p")), {{true, 0}, {true, 0}}};
  auto report = check_cyclic(g, System::GrzInf);
  REQUIRE_FALSE(report.ok());
  bool traced = false;
  for (const auto& v : report.violations)
    traced = traced || v.message.find("box right") != std::string::npos;
  CHECK(traced);
}

TEST_CASE("holes are rejected unless allowed") {
  CyclicProof g;
  g.nodes.resize(2);
  g.nodes[0] = {seq("p => p -> p"), imp_r(fm("p -> p")), {{false, 1}}};
  g.nodes[1] = {seq("p, p => p"), std::nullopt, {}};
  CHECK_FALSE(check_cyclic(g, System::GrzInf).ok());
  CHECK(check_cyclic(g, System::GrzInf, {.allow_holes = true}).ok());
  CHECK(count_holes(g) == 1);
}

TEST_CASE("dangling and out of range children are caught") {
  CyclicProof g;
  g.nodes.resize(1);
  g.nodes[0] = {seq("p => p"), ax(fm("p")), {{false, 5}}};
  CHECK_FALSE(check_cyclic(g, System::GrzSeq).ok());

  CyclicProof wrongcount;
  wrongcount.nodes.resize(1);
  wrongcount.nodes[0] = {seq("p -> q, p => q"), imp_l(fm("p -> q")), {}};
  CHECK_FALSE(check_cyclic(wrongcount, System::GrzSeq).ok());
}

TEST_CASE("finite and cyclic presentations round trip") {
  FiniteProof p = distribution_proof();
  CyclicProof g = from_finite_proof(p);
  CHECK_FALSE(has_backedges(g));
  FiniteProof back = to_finite_proof(g);
  CHECK(back.sequent == p.sequent);
  CHECK(node_count(back) == node_count(p));
  CHECK(check_finite(back, System::GrzSeq).ok());

  CyclicProof loop = grz_schema(fm("p"));
  CHECK_THROWS_AS(to_finite_proof(loop), Error);
}

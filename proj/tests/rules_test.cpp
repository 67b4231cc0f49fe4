#include "doctest.h"
#include "testutil.hpp"

using namespace grz;
using grztest::fm;
using grztest::fms;
using grztest::seq;

TEST_CASE("axiom instances have no premises") {
  CHECK(premises_of(ax(fm("p")), seq("p, q => p")).empty());
  CHECK(premises_of(ax(fm("[]p -> q")), seq("[]p -> q => []p -> q")).empty());
  CHECK(premises_of(ax_bot(), seq("bot, p => q")).empty());
  CHECK_THROWS_AS(premises_of(ax(fm("p")), seq("q => p")), RuleError);
  CHECK_THROWS_AS(premises_of(ax(fm("p")), seq("p => q")), RuleError);
  CHECK_THROWS_AS(premises_of(ax_bot(), seq("p => q")), RuleError);
}

TEST_CASE("implication left consumes the principal and splits") {
  auto prems = premises_of(imp_l(fm("p -> q")), seq("p -> q, r => s"));
  REQUIRE(prems.size() == 2);
  CHECK(prems[0] == seq("q, r => s"));
  CHECK(prems[1] == seq("r => p, s"));
  CHECK_THROWS_AS(premises_of(imp_l(fm("p -> q")), seq("r => s")), RuleError);
  CHECK_THROWS_AS(premises_of(imp_l(fm("p")), seq("p => q")), RuleError);
}

TEST_CASE("implication right moves the parts across") {
  auto prems = premises_of(imp_r(fm("p -> q")), seq("r => p -> q, s"));
  REQUIRE(prems.size() == 1);
  CHECK(prems[0] == seq("p, r => q, s"));
  CHECK_THROWS_AS(premises_of(imp_r(fm("p -> q")), seq("r => s")), RuleError);
}

TEST_CASE("reflexivity unfolds a box on the left") {
  auto prems = premises_of(refl(fm("[]p")), seq("[]p, q => r"));
  REQUIRE(prems.size() == 1);
  CHECK(prems[0] == seq("p, []p, q => r"));
  CHECK_THROWS_AS(premises_of(refl(fm("[]p")), seq("q => r")), RuleError);
  CHECK_THROWS_AS(premises_of(refl(fm("p")), seq("p => q")), RuleError);
}

TEST_CASE("finitary box rule") {
  auto prems = premises_of(box_grz(fm("[]p"), fms("[]q, []r")),
                           seq("[]q, []r, s => []p, t"));
  REQUIRE(prems.size() == 1);
  CHECK(prems[0] == seq("[]q, []r, [](p -> []p) => p"));

  CHECK_THROWS_AS(premises_of(box_grz(fm("[]p"), fms("[]q")), seq("s => []p")), RuleError);
  CHECK_THROWS_AS(premises_of(box_grz(fm("[]p"), fms("q")), seq("q => []p")), RuleError);
  CHECK_THROWS_AS(premises_of(box_grz(fm("p"), {}), seq("=> p")), RuleError);
}

TEST_CASE("non-well-founded box rule") {
  auto prems = premises_of(box_inf(fm("[]p"), fms("[]q")),
                           seq("[]q, s => []p, t"));
  REQUIRE(prems.size() == 2);
  CHECK(prems[0] == seq("[]q, s => p, t"));
  CHECK(prems[1] == seq("[]q => p"));

  auto empty_ctx = premises_of(box_inf(fm("[]p"), {}), seq("=> []p"));
  REQUIRE(empty_ctx.size() == 2);
  CHECK(empty_ctx[0] == seq("=> p"));
  CHECK(empty_ctx[1] == seq("=> p"));

  CHECK_THROWS_AS(premises_of(box_inf(fm("[]p"), fms("[]q")), seq("s => []p")), RuleError);
  CHECK_THROWS_AS(premises_of(box_inf(fm("p"), {}), seq("=> p")), RuleError);
}

TEST_CASE("cut introduces the formula on both sides") {
  auto prems = premises_of(cut(fm("[]p")), seq("q => r"));
  REQUIRE(prems.size() == 2);
  CHECK(prems[0] == seq("q => []p, r"));
  CHECK(prems[1] == seq("[]p, q => r"));
}

TEST_CASE("multiplicity matters for principal lookup") {
  auto prems = premises_of(imp_l(fm("p -> q")), seq("p -> q, p -> q => r"));
  REQUIRE(prems.size() == 2);
  CHECK(prems[0] == seq("p -> q, q => r"));
  CHECK(prems[1] == seq("p -> q => p, r"));
}

TEST_CASE("system rule tables") {
  CHECK(rule_allowed(box_grz(fm("[]p"), {}), System::GrzSeq));
  CHECK_FALSE(rule_allowed(box_grz(fm("[]p"), {}), System::GrzInf));
  CHECK(rule_allowed(box_inf(fm("[]p"), {}), System::GrzInf));
  CHECK_FALSE(rule_allowed(box_inf(fm("[]p"), {}), System::GrzSeq));
  CHECK(rule_allowed(cut(fm("p")), System::GrzSeqCut));
  CHECK(rule_allowed(cut(fm("p")), System::GrzInfCut));
  CHECK_FALSE(rule_allowed(cut(fm("p")), System::GrzSeq));
  CHECK_FALSE(rule_allowed(cut(fm("p")), System::GrzInf));

  CHECK(rule_allowed(ax(fm("p -> q")), System::GrzSeq));
  CHECK(rule_allowed(ax(fm("p -> q")), System::GrzSeqCut));
  CHECK_FALSE(rule_allowed(ax(fm("p -> q")), System::GrzInf));
  CHECK(rule_allowed(ax(fm("p")), System::GrzInf));
  CHECK(rule_allowed(refl(fm("[]p")), System::GrzInf));
  CHECK(rule_allowed(imp_l(fm("p -> q")), System::GrzInfCut));
}

TEST_CASE("names") {
  CHECK(std::string(to_string(RuleTag::BoxInf)) == "box");
  CHECK(std::string(to_string(RuleTag::BoxGrz)) == "box-grz");
  CHECK(std::string(to_string(RuleTag::AxBot)) == "ax-bot");
  CHECK(std::string(to_string(RuleTag::Cut)) == "cut");
  CHECK(std::string(to_string(System::GrzInfCut)) == "grz-inf-cut");
  CHECK(std::string(to_string(System::GrzSeq)) == "grz-seq");
  CHECK(has_cut(System::GrzSeqCut));
  CHECK_FALSE(has_cut(System::GrzInf));
  CHECK(is_finitary(System::GrzSeqCut));
  CHECK_FALSE(is_finitary(System::GrzInfCut));
}

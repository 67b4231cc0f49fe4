#include <benchmark/benchmark.h>

#include "grz/cutelim.hpp"
#include "grz/metric.hpp"
#include "grz/parse.hpp"
#include "grz/search.hpp"
#include "grz/translate.hpp"

using namespace grz;

namespace {

InfProofPtr tower(int k, bool variant) {
  FormulaRef p = Formula::atom("p");
  FormulaRef bp = Formula::box(p);
  if (k <= 0) {
    Sequent s1{FormulaMultiset{bp, p}, FormulaMultiset::single(p)};
    InfProofPtr top = InfProof::leaf(s1, ax(p), "bench");
    if (variant) {
      Sequent s2{FormulaMultiset{bp, p}.plus(p), FormulaMultiset::single(p)};
      top = InfProof::node_now(s1, refl(bp), {InfProof::leaf(s2, ax(p), "bench")}, "bench");
    }
    Sequent s0{FormulaMultiset::single(bp), FormulaMultiset::single(p)};
    return InfProof::node_now(s0, refl(bp), {top}, "bench");
  }
  FormulaRef body = p;
  for (int i = 1; i < k; ++i) body = Formula::box(body);
  FormulaRef head = Formula::box(body);
  Sequent s{FormulaMultiset::single(bp), FormulaMultiset::single(head)};
  return InfProof::node_now(s, box_inf(head, FormulaMultiset::single(bp)),
                            {tower(k - 1, false), tower(k - 1, variant)}, "bench");
}

InfProofPtr wrap_cut(const InfProofPtr& p, FormulaRef a) {
  return InfProof::node_now(p->sequent(), cut(a),
                            {weaken(p, {}, FormulaMultiset::single(a)),
                             weaken(p, FormulaMultiset::single(a), {})},
                            "bench");
}

const Sequent kGrzAxiom = parse_sequent("=> [] ( [] (p -> [] p) -> p ) -> p");

void BM_ProveFinitary(benchmark::State& state) {
  for (auto _ : state) {
    auto res = prove_seq(kGrzAxiom);
    benchmark::DoNotOptimize(res.verdict);
  }
}

void BM_ProveCyclic(benchmark::State& state) {
  for (auto _ : state) {
    auto res = prove_inf(kGrzAxiom);
    benchmark::DoNotOptimize(res.verdict);
  }
}

void BM_CheckSchema(benchmark::State& state) {
  CyclicProof g = grz_schema(parse_formula("[]p -> q"));
  for (auto _ : state) {
    auto report = check_cyclic(g, System::GrzInf);
    benchmark::DoNotOptimize(report.ok());
  }
}

void BM_ExpandSchema(benchmark::State& state) {
  CyclicProof g = grz_schema(parse_formula("p"));
  for (auto _ : state) {
    Budget budget;
    Fragment f = expand(unfold(g), static_cast<int>(state.range(0)), budget);
    benchmark::DoNotOptimize(f.children.size());
  }
}

void BM_Distance(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  InfProofPtr a = tower(k, false);
  InfProofPtr b = tower(k, true);
  for (auto _ : state) {
    Budget budget;
    Distance d = distance(a, b, k + 2, budget);
    benchmark::DoNotOptimize(d.exponent);
  }
}

void BM_Eliminate(benchmark::State& state) {
  int level = static_cast<int>(state.range(0));
  FormulaRef q = parse_formula("[]p -> p");
  for (auto _ : state) {
    InfProofPtr p = wrap_cut(unfold(grz_schema(parse_formula("p"))), q);
    Budget budget;
    bool clear = cut_free_to(eliminate(p), level, budget);
    benchmark::DoNotOptimize(clear);
  }
}

void BM_Finitise(benchmark::State& state) {
  CyclicProof g = grz_schema(parse_formula("p"));
  for (auto _ : state) {
    FiniteProof fp = inf_to_seq(unfold(g));
    benchmark::DoNotOptimize(node_count(fp));
  }
}

void BM_PipelineFinitary(benchmark::State& state) {
  auto res = prove_seq(kGrzAxiom);
  FormulaRef a = parse_formula("[](p -> []p)");
  FiniteProof base = make_node(res.finite->sequent, cut(a),
                               {weak_seq(*res.finite, {}, FormulaMultiset::single(a)),
                                weak_seq(*res.finite, FormulaMultiset::single(a), {})});
  for (auto _ : state) {
    Budget budget;
    FiniteProof out = eliminate_finitary(base, budget);
    benchmark::DoNotOptimize(node_count(out));
  }
}

}  // namespace

BENCHMARK(BM_ProveFinitary);
BENCHMARK(BM_ProveCyclic);
BENCHMARK(BM_CheckSchema);
BENCHMARK(BM_ExpandSchema)->Arg(2)->Arg(4)->Arg(6);
BENCHMARK(BM_Distance)->Arg(4)->Arg(8);
BENCHMARK(BM_Eliminate)->Arg(2)->Arg(4);
BENCHMARK(BM_Finitise);
BENCHMARK(BM_PipelineFinitary);
BENCHMARK_MAIN();

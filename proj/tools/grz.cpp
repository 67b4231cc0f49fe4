#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "grz/cutelim.hpp"
#include "grz/errors.hpp"
#include "grz/metric.hpp"
#include "grz/parse.hpp"
#include "grz/proof_io.hpp"
#include "grz/search.hpp"
#include "grz/translate.hpp"

namespace {

using namespace grz;

FormulaMultiset parse_formula_list(const std::string& s) {
  return parse_sequent(s + " =>").antecedent;
}

void write_out(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot write " + out_path);
  out << text;
}

void emit_proof(const std::string& out_path, const ProofFile& pf) {
  write_out(out_path, proof_to_json(pf));
}

int count_backedges(const CyclicProof& p) {
  int n = 0;
  for (const auto& node : p.nodes)
    for (const auto& c : node.children)
      if (c.backedge) ++n;
  return n;
}

System fragment_system(const Fragment& f, bool finitary) {
  bool cuts = count_tag(f, RuleTag::Cut) > 0;
  if (finitary) return cuts ? System::GrzSeqCut : System::GrzSeq;
  return cuts ? System::GrzInfCut : System::GrzInf;
}

InfProofPtr unfold_input(const ProofFile& pf, const char* command) {
  if (is_finitary(pf.system))
    throw Error(std::string(command) + " expects a proof in grz-inf or grz-inf-cut");
  if (count_holes(pf.proof) > 0)
    throw Error(std::string(command) + " cannot consume a truncated prefix: the file has " +
                std::to_string(count_holes(pf.proof)) +
                " holes; feed it the untruncated source instead");
  return unfold(pf.proof);
}

int cmd_check(const std::string& path, const std::string& system_override, bool allow_holes,
              int level, std::size_t budget_limit) {
  ProofFile pf = load_proof(path);
  System sys = system_override.empty() ? pf.system : system_from_string(system_override);
  if (is_finitary(sys)) {
    FiniteProof fp;
    try {
      fp = to_finite_proof(pf.proof);
    } catch (const Error& e) {
      std::cout << "invalid: " << e.what() << "\n";
      return 1;
    }
    auto report = check_finite(fp, sys);
    if (!report.ok()) {
      std::cout << report.to_string() << "invalid\n";
      return 1;
    }
    std::cout << "valid " << to_string(sys) << " proof: " << node_count(fp) << " nodes, "
              << count_cuts(fp) << " cuts, height " << height(fp) << "\n";
    return 0;
  }
  auto report = check_cyclic(pf.proof, sys, CyclicCheckOptions{allow_holes});
  if (!report.ok()) {
    std::cout << report.to_string() << "invalid\n";
    return 1;
  }
  std::cout << "valid " << to_string(sys) << " presentation: " << pf.proof.nodes.size()
            << " nodes, " << count_backedges(pf.proof) << " back edges, "
            << count_cuts(pf.proof) << " cuts";
  if (count_holes(pf.proof) > 0) std::cout << ", " << count_holes(pf.proof) << " holes";
  std::cout << "\n";
  if (level >= 0) {
    if (count_holes(pf.proof) > 0) {
      std::cout << "level check skipped: the presentation has holes\n";
      return 0;
    }
    Budget budget(budget_limit);
    auto deep = check_level(unfold(pf.proof), sys, level, budget);
    if (!deep.ok()) {
      std::cout << deep.to_string() << "invalid at level " << level << "\n";
      return 1;
    }
    std::cout << "unfolding valid to level " << level << "\n";
  }
  return 0;
}

int cmd_prove(const std::string& goal_text, const std::string& system_name,
              std::size_t max_nodes, const std::string& out_path) {
  Sequent goal = parse_sequent(goal_text);
  System sys = system_from_string(system_name);
  SearchLimits limits;
  limits.max_nodes = max_nodes;
  SearchResult res;
  ProofFile pf;
  if (sys == System::GrzSeq) {
    res = prove_seq(goal, limits);
    if (res.finite) pf = ProofFile{System::GrzSeq, from_finite_proof(*res.finite)};
  } else if (sys == System::GrzInf) {
    res = prove_inf(goal, limits);
    if (res.cyclic) pf = ProofFile{System::GrzInf, *res.cyclic};
  } else {
    throw Error("prove searches in grz-seq or grz-inf");
  }
  std::cout << to_string(res.verdict) << " (" << res.nodes_visited << " sequents visited)\n";
  if (res.verdict == Verdict::Proved && !out_path.empty()) save_proof(out_path, pf);
  switch (res.verdict) {
    case Verdict::Proved:
      return 0;
    case Verdict::Unprovable:
      return 1;
    case Verdict::Unknown:
      return 2;
  }
  return 2;
}

int cmd_transform(const std::string& path, const std::string& kind_name,
                  const std::string& target_text, const std::string& pi_text,
                  const std::string& sigma_text, int depth, std::size_t budget_limit,
                  const std::string& out_path) {
  ProofFile pf = load_proof(path);
  InfProofPtr p = unfold_input(pf, "transform");
  auto kind = transform_kind_from_string(kind_name);
  if (!kind) throw Error("unknown transform \"" + kind_name + "\"");
  TransformSpec spec;
  spec.kind = *kind;
  if (!target_text.empty()) spec.target = parse_formula(target_text);
  spec.pi = parse_formula_list(pi_text);
  spec.sigma = parse_formula_list(sigma_text);
  InfProofPtr q = apply_transform(p, spec);
  Budget budget(budget_limit);
  Fragment frag = expand(q, depth, budget);
  emit_proof(out_path, ProofFile{pf.system, fragment_to_cyclic(frag)});
  return 0;
}

int cmd_reduce(const std::string& left_path, const std::string& right_path,
               const std::string& formula_text, int depth, std::size_t budget_limit,
               const std::string& out_path) {
  ProofFile left = load_proof(left_path);
  ProofFile right = load_proof(right_path);
  ReductionRequest req;
  req.cut_formula = parse_formula(formula_text);
  req.left = unfold_input(left, "reduce");
  req.right = unfold_input(right, "reduce");
  Budget budget(budget_limit);
  InfProofPtr out = reduce(req, budget);
  Fragment frag = expand(out, depth, budget);
  emit_proof(out_path, ProofFile{System::GrzInfCut, fragment_to_cyclic(frag)});
  return 0;
}

int cmd_cutelim(const std::string& path, int iterate_steps, int depth, std::size_t budget_limit,
                const std::string& out_path) {
  ProofFile pf = load_proof(path);
  InfProofPtr p = unfold_input(pf, "cutelim");
  InfProofPtr q = iterate_steps >= 0 ? iterate(iterate_steps, p) : eliminate(p);
  Budget budget(budget_limit);
  Fragment frag = expand(q, depth, budget);
  int probe = iterate_steps >= 0 && iterate_steps < depth ? iterate_steps : depth;
  bool clear = cut_free_to(q, probe, budget);
  std::cerr << "cut free to level " << probe << ": " << (clear ? "yes" : "no") << "\n";
  emit_proof(out_path, ProofFile{fragment_system(frag, false), fragment_to_cyclic(frag)});
  return 0;
}

int cmd_translate(const std::string& path, const std::string& to_name, int depth,
                  std::size_t budget_limit, const std::string& out_path) {
  ProofFile pf = load_proof(path);
  System to = system_from_string(to_name);
  Budget budget(budget_limit);
  if (to == System::GrzInf || to == System::GrzInfCut) {
    if (!is_finitary(pf.system)) throw Error("translate --to grz-inf expects a finitary proof");
    FiniteProof fp = to_finite_proof(pf.proof);
    auto report = check_finite(fp, pf.system);
    if (!report.ok()) {
      std::cout << report.to_string() << "invalid input\n";
      return 1;
    }
    Fragment frag = expand(seq_to_inf(fp), depth, budget);
    emit_proof(out_path, ProofFile{fragment_system(frag, false), fragment_to_cyclic(frag)});
    return 0;
  }
  if (!(pf.system == System::GrzInf)) throw Error("translate --to grz-seq expects a grz-inf proof");
  auto report = check_cyclic(pf.proof, System::GrzInf);
  if (!report.ok()) {
    std::cout << report.to_string() << "invalid input\n";
    return 1;
  }
  FiniteProof fp = inf_to_seq(unfold(pf.proof), FormulaSet{}, budget);
  emit_proof(out_path, ProofFile{System::GrzSeq, from_finite_proof(fp)});
  return 0;
}

int cmd_pipeline(const std::string& path, std::size_t budget_limit, const std::string& out_path) {
  ProofFile pf = load_proof(path);
  if (!is_finitary(pf.system)) throw Error("pipeline expects a grz-seq-cut proof");
  FiniteProof fp = to_finite_proof(pf.proof);
  auto report = check_finite(fp, System::GrzSeqCut);
  if (!report.ok()) {
    std::cout << report.to_string() << "invalid input\n";
    return 1;
  }
  Budget budget(budget_limit);
  FiniteProof out = eliminate_finitary(fp, budget);
  std::cerr << "cuts: " << count_cuts(fp) << " -> " << count_cuts(out) << ", nodes: "
            << node_count(fp) << " -> " << node_count(out) << "\n";
  emit_proof(out_path, ProofFile{System::GrzSeq, from_finite_proof(out)});
  return 0;
}

int cmd_distance(const std::string& left_path, const std::string& right_path, int max_level,
                 std::size_t budget_limit) {
  ProofFile left = load_proof(left_path);
  ProofFile right = load_proof(right_path);
  Budget budget(budget_limit);
  Distance d = distance(unfold_input(left, "distance"), unfold_input(right, "distance"),
                        max_level, budget);
  std::cout << "distance " << (d.exact ? "= " : "<= ") << "2^-" << d.exponent << "\n";
  return 0;
}

int cmd_stats(const std::string& path, std::size_t budget_limit) {
  ProofFile pf = load_proof(path);
  std::cout << "system: " << to_string(pf.system) << "\n";
  std::cout << "nodes: " << pf.proof.nodes.size() << "\n";
  std::cout << "back edges: " << count_backedges(pf.proof) << "\n";
  std::cout << "holes: " << count_holes(pf.proof) << "\n";
  std::cout << "cuts: " << count_cuts(pf.proof) << "\n";
  if (!has_backedges(pf.proof) && count_holes(pf.proof) == 0) {
    try {
      FiniteProof fp = to_finite_proof(pf.proof);
      std::cout << "height: " << height(fp) << "\n";
      std::cout << "tree nodes: " << node_count(fp) << "\n";
    } catch (const Error&) {
    }
  } else if (count_holes(pf.proof) == 0 &&
             check_cyclic(pf.proof, System::GrzInfCut).ok()) {
    Budget budget(budget_limit);
    std::cout << "local height: " << local_height(unfold(pf.proof), budget) << "\n";
  }
  return 0;
}

int cmd_export(const std::string& path, const std::string& format, const std::string& out_path) {
  ProofFile pf = load_proof(path);
  if (format == "dot") {
    write_out(out_path, proof_to_dot(pf));
    return 0;
  }
  if (format == "json") {
    emit_proof(out_path, pf);
    return 0;
  }
  throw Error("unknown export format \"" + format + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequent calculi for the modal logic Grz: checking, search, cut elimination"};
  app.require_subcommand(1);

  std::string file, file2, out_path, system_name, goal_text, kind_name, target_text;
  std::string pi_text, sigma_text, to_name, formula_text, format = "dot";
  std::string prove_system = "grz-seq";
  bool allow_holes = false;
  int level = -1, depth = 6, iterate_steps = -1, max_level = 12;
  std::size_t budget_limit = grz::kDefaultNodeBudget;

  auto* check = app.add_subcommand("check", "Validate a proof file");
  check->add_option("file", file, "proof file")->required();
  check->add_option("--system", system_name, "override the recorded system");
  check->add_flag("--allow-holes", allow_holes, "accept open leaves");
  check->add_option("--level", level, "also validate the unfolding to this box level");
  check->add_option("--budget", budget_limit, "node budget for the level check");

  auto* prove = app.add_subcommand("prove", "Search for a proof of a sequent");
  prove->add_option("sequent", goal_text, "goal, e.g. \"[]p => p\"")->required();
  prove->add_option("--system", prove_system, "grz-seq or grz-inf");
  prove->add_option("--budget", budget_limit, "sequent visit limit");
  prove->add_option("-o,--out", out_path, "write the proof here");

  auto* transform = app.add_subcommand("transform", "Apply an admissible transformation");
  transform->add_option("file", file, "proof file (grz-inf or grz-inf-cut)")->required();
  transform->add_option("--kind", kind_name, "wk, li_imp, ri_imp, inv_imp, inv_bot, li_box, acl, acr")
      ->required();
  transform->add_option("--target", target_text, "traced formula");
  transform->add_option("--pi", pi_text, "formulas joining the antecedent (wk)");
  transform->add_option("--sigma", sigma_text, "formulas joining the succedent (wk)");
  transform->add_option("--depth", depth, "box level of the exported prefix");
  transform->add_option("--budget", budget_limit, "node budget");
  transform->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* reduce = app.add_subcommand("reduce", "Reduce one cut");
  reduce->add_option("left", file, "proof of Gamma => A, Delta")->required();
  reduce->add_option("right", file2, "proof of Gamma, A => Delta")->required();
  reduce->add_option("--formula", formula_text, "the cut formula")->required();
  reduce->add_option("--depth", depth, "box level of the exported prefix");
  reduce->add_option("--budget", budget_limit, "node budget");
  reduce->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* cutelim = app.add_subcommand("cutelim", "Eliminate cuts from a non-well-founded proof");
  cutelim->add_option("file", file, "proof file (grz-inf-cut)")->required();
  cutelim->add_option("--iterate", iterate_steps, "apply this many operator steps instead");
  cutelim->add_option("--depth", depth, "box level of the exported prefix");
  cutelim->add_option("--budget", budget_limit, "node budget");
  cutelim->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* translate = app.add_subcommand("translate", "Move a proof between the two calculi");
  translate->add_option("file", file, "proof file")->required();
  translate->add_option("--to", to_name, "grz-inf or grz-seq")->required();
  translate->add_option("--depth", depth, "box level of the exported prefix");
  translate->add_option("--budget", budget_limit, "node budget");
  translate->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* pipeline = app.add_subcommand("pipeline", "Finitary cut elimination end to end");
  pipeline->add_option("file", file, "proof file (grz-seq-cut)")->required();
  pipeline->add_option("--budget", budget_limit, "node budget");
  pipeline->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* dist = app.add_subcommand("distance", "Metric distance between two proofs");
  dist->add_option("left", file, "proof file")->required();
  dist->add_option("right", file2, "proof file")->required();
  dist->add_option("--max-level", max_level, "deepest level probed");
  dist->add_option("--budget", budget_limit, "node budget");

  auto* stats = app.add_subcommand("stats", "Shape summary of a proof file");
  stats->add_option("file", file, "proof file")->required();
  stats->add_option("--budget", budget_limit, "node budget");

  auto* export_ = app.add_subcommand("export", "Render a proof file");
  export_->add_option("file", file, "proof file")->required();
  export_->add_option("--format", format, "dot or json");
  export_->add_option("-o,--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(file, system_name, allow_holes, level, budget_limit);
    if (*prove) return cmd_prove(goal_text, prove_system, budget_limit, out_path);
    if (*transform)
      return cmd_transform(file, kind_name, target_text, pi_text, sigma_text, depth,
                           budget_limit, out_path);
    if (*reduce) return cmd_reduce(file, file2, formula_text, depth, budget_limit, out_path);
    if (*cutelim) return cmd_cutelim(file, iterate_steps, depth, budget_limit, out_path);
    if (*translate) return cmd_translate(file, to_name, depth, budget_limit, out_path);
    if (*pipeline) return cmd_pipeline(file, budget_limit, out_path);
    if (*dist) return cmd_distance(file, file2, max_level, budget_limit);
    if (*stats) return cmd_stats(file, budget_limit);
    if (*export_) return cmd_export(file, format, out_path);
  } catch (const grz::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const grz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

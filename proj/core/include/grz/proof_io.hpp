#pragma once

#include <string>

#include "grz/metric.hpp"
#include "grz/proofs.hpp"
#include "grz/rules.hpp"

namespace grz {

// A proof graph together with the system it claims to live in.
struct ProofFile {
  System system = System::GrzSeq;
  CyclicProof proof;
};

System system_from_string(const std::string& s);
RuleTag rule_tag_from_string(const std::string& s);

// JSON text with one object per node: id, sequent, rule {tag, principal,
// boxpi} and children ({"node": id} or {"backedge": id}), or hole: true.
std::string proof_to_json(const ProofFile& pf);
ProofFile proof_from_json(const std::string& text);

void save_proof(const std::string& path, const ProofFile& pf);
ProofFile load_proof(const std::string& path);

// Graphviz rendering; back edges are dashed, the root is double-bordered.
std::string proof_to_dot(const ProofFile& pf);

// Embeds a fragment as a proof graph whose holes become open leaves.
CyclicProof fragment_to_cyclic(const Fragment& f);

}  // namespace grz

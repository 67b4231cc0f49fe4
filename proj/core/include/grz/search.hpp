#pragma once

#include <cstdint>
#include <optional>

#include "grz/proofs.hpp"
#include "grz/rules.hpp"
#include "grz/sequent.hpp"

namespace grz {

struct SearchLimits {
  std::uint64_t max_nodes = 100000;
};

enum class Verdict { Proved, Unprovable, Unknown };

const char* to_string(Verdict v);

struct SearchResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<FiniteProof> finite;
  std::optional<CyclicProof> cyclic;
  std::uint64_t nodes_visited = 0;
};

// Backward search for a GrzSeq proof of the goal sequent.
SearchResult prove_seq(const Sequent& goal, const SearchLimits& limits = {});

// Backward search for a cyclic Grz-infinity proof of the goal sequent.
SearchResult prove_inf(const Sequent& goal, const SearchLimits& limits = {});

}  // namespace grz

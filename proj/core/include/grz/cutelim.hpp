#pragma once

#include <functional>

#include "grz/reduce.hpp"

namespace grz {

using Transformer = std::function<InfProofPtr(const InfProofPtr&)>;

// Clears the main fragment of cuts by folding the reducing maps over it, one
// bottom-up pass.  Right box premises are passed through untouched, so the
// output agrees with the input behind them.
InfProofPtr clear_main_fragment(const InfProofPtr& p, Budget& budget);
InfProofPtr clear_main_fragment(const InfProofPtr& p);

// One step of the elimination operator: clear the main fragment if needed,
// then defer u to every right box premise.
InfProofPtr step(const Transformer& u, const InfProofPtr& p, Budget& budget);
InfProofPtr step(const Transformer& u, const InfProofPtr& p);

// n-fold iteration of step starting from the identity; cut free to level n.
InfProofPtr iterate(int n, const InfProofPtr& p);

// The fixed point of step: fully cut-free elimination, computed on demand.
// Deferred occurrences are memoised by the identity of the input node they
// hang off, so re-demanding a shared subproof reuses the earlier result.
InfProofPtr eliminate(const InfProofPtr& p);

}  // namespace grz

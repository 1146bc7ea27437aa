#pragma once

#include <vector>

#include "sbsn/election.hpp"
#include "sbsn/outcome.hpp"

namespace sbsn {

// 1-based rank of the preferred candidate per voter.
std::vector<int> position_vector(const Instance& instance);

// Complete unit-weight network under the majority target with linear costs:
// every voter sees the same effective shift alpha = sum of direct shifts, so
// the optimum is a selection on the position vector realized through the
// cheapest coefficient.
SolveOutcome solve_complete_majority(const Instance& instance);

// Complete unit-weight network under plurality with linear costs: binary
// search the candidate uniform shifts {0} united with {rank-1} using the win
// monotonicity in alpha.
SolveOutcome solve_complete_plurality(const Instance& instance);

// Transitive tournament, two candidates, unit costs and weights: bribing the
// first vertex in decreasing out-degree order that does not already top the
// preferred candidate convinces everyone after it.
SolveOutcome solve_transitive_tournament(const Instance& instance);

}  // namespace sbsn

#pragma once

#include "sbsn/election.hpp"
#include "sbsn/outcome.hpp"

namespace sbsn {

// Uni-directed path with unit weights (each voter is influenced only by its
// right neighbor), linear costs, majority target. Right-to-left dynamic
// program over (voter, direct shift, budget) maximizing convinced voters.
SolveOutcome solve_path_dp(const Instance& instance);

}  // namespace sbsn

#pragma once

#include "sbsn/election.hpp"
#include "sbsn/outcome.hpp"
#include "sbsn/tree_decomposition.hpp"

namespace sbsn {

// Two candidates, unit bribe costs, symmetric unit weights. Bag states track
// bribed vertices, activated vertices and the subset of activated vertices
// whose bribed neighbor has not been seen yet; the budget axis is clamped to
// the supporter deficit. Value of a state = activated non-supporters in the
// subtree; pre-existing supporters are added outside the table.
SolveOutcome solve_treewidth_dp(const Instance& instance, const NiceTreeDecomposition& dec);

// Convenience wrapper that builds and nicifies a decomposition first.
SolveOutcome solve_treewidth(const Instance& instance);

// Join-node value combination: both subtrees count the bag's activated
// non-supporters, so one copy is subtracted.
constexpr int tw_join_value(int left, int right, int activated_nonsupporters_in_bag) {
    return left + right - activated_nonsupporters_in_bag;
}

}  // namespace sbsn

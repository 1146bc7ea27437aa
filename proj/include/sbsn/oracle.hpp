#pragma once

#include <optional>
#include <vector>

#include "sbsn/election.hpp"
#include "sbsn/graph.hpp"
#include "sbsn/outcome.hpp"

namespace sbsn {

struct EnumerationBounds {
    std::optional<std::int64_t> max_total_cost;  // defaults to the instance budget
    std::optional<int> per_voter_cap;            // defaults to m-1
};

// Exhaustive reference solver: depth-first over all shift vectors with cost
// pruning. Minimum cost, ties broken by lexicographically smallest witness.
// Intended for desk-scale cross-validation only.
SolveOutcome brute_force_min_cost(const Instance& instance, const EnumerationBounds& bounds = {});

// Smallest-first enumeration of vertex sets D with |D| <= k whose closed
// neighborhood covers at least t vertices.
std::optional<std::vector<int>> brute_force_partial_dominating(const UndirectedGraph& graph, int k, int t);

std::optional<std::vector<int>> brute_force_dominating(const UndirectedGraph& graph, int k);

}  // namespace sbsn

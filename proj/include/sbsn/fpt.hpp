#pragma once

#include <optional>
#include <vector>

#include "sbsn/election.hpp"
#include "sbsn/graph.hpp"
#include "sbsn/outcome.hpp"

namespace sbsn {

enum class DeletionKind { FeedbackVertexSet, ClusterVertexDeletion };

struct DeletionSet {
    DeletionKind kind = DeletionKind::FeedbackVertexSet;
    std::vector<int> vertices;
};

// Minimum-size deletion set by iterative deepening over branching on cycle
// vertices (forest target) or induced-P3 vertices (cluster target).
DeletionSet find_deletion_set(const UndirectedGraph& graph, DeletionKind kind);

// Enumerates every bribed subset Y of a feedback vertex set; each branch fixes
// Y, deletes it, and solves the rest with the treewidth DP on a decomposition
// whose bags extend the forest bags by the surviving deletion vertices.
SolveOutcome solve_via_fvs(const Instance& instance);

// Enumerates every bribed subset Y of a cluster vertex deletion set; each
// branch runs a clique knapsack extended with a coverage mask over the
// surviving deletion vertices, so influence from clique bribes back into the
// deletion set is accounted exactly.
SolveOutcome solve_via_cvd(const Instance& instance);

// Branch and bound for the smallest bribe set whose closed neighborhood gains
// the missing supporters; unit costs, unit weights, two candidates.
SolveOutcome solve_via_partial_domination(const Instance& instance, std::optional<int> k_max = std::nullopt);

}  // namespace sbsn

#pragma once

#include <cstdint>
#include <vector>

#include "sbsn/election.hpp"
#include "sbsn/outcome.hpp"

namespace sbsn {

// Per-clique aggregate: flipping the clique means bribing its cheapest member,
// which convinces every member that was not already a supporter.
struct CliqueSummary {
    std::int64_t min_cost = 0;  // cheapest unit bribe inside the clique
    int gain = 0;               // members not yet topping the preferred candidate
};

// 0/1 knapsack over clique summaries with full table for reconstruction.
class ClusterKnapsack {
  public:
    ClusterKnapsack(const std::vector<CliqueSummary>& summaries, std::int64_t budget);

    std::int64_t budget() const { return budget_; }
    // Maximum total gain using cost at most d, 0 <= d <= budget.
    std::int64_t max_gain(std::int64_t d) const { return table_.back()[static_cast<std::size_t>(d)]; }
    // Indices of the cliques selected by an optimal solution of cost <= d.
    std::vector<int> selection(std::int64_t d) const;
    std::uint64_t table_cells() const { return static_cast<std::uint64_t>(table_.size()) * (budget_ + 1); }

  private:
    std::vector<CliqueSummary> items_;
    std::int64_t budget_ = 0;
    // Gains are bounded by the voter count, so rows hold 32-bit entries.
    std::vector<std::vector<std::int32_t>> table_;  // table_[i][d]: best gain from first i items
};

// Disjoint-clique networks, two candidates, majority target, arbitrary
// per-voter unit bribe costs. Runs the clique knapsack and reconstructs the
// cheapest member per selected clique.
SolveOutcome solve_cluster_dp(const Instance& instance);

}  // namespace sbsn

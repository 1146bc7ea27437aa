#include "sbsn/cluster.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace sbsn {

ClusterKnapsack::ClusterKnapsack(const std::vector<CliqueSummary>& summaries, std::int64_t budget)
    : items_(summaries), budget_(budget) {
    if (budget_ < 0) throw std::invalid_argument("negative knapsack budget");
    const std::size_t width = static_cast<std::size_t>(budget_) + 1;
    table_.assign(items_.size() + 1, {});
    table_[0].assign(width, 0);
    for (std::size_t i = 1; i <= items_.size(); ++i) {
        const auto& item = items_[i - 1];
        table_[i] = table_[i - 1];
        if (item.min_cost <= budget_) {
            auto& row = table_[i];
            const auto& prev = table_[i - 1];
            for (std::int64_t d = budget_; d >= item.min_cost; --d) {
                const std::int32_t take = prev[static_cast<std::size_t>(d - item.min_cost)] + item.gain;
                if (take > row[static_cast<std::size_t>(d)]) row[static_cast<std::size_t>(d)] = take;
            }
        }
    }
}

std::vector<int> ClusterKnapsack::selection(std::int64_t d) const {
    if (d < 0 || d > budget_) throw std::invalid_argument("knapsack selection budget out of range");
    std::vector<int> chosen;
    std::int64_t left = d;
    for (std::size_t i = items_.size(); i > 0; --i) {
        // Prefer "skip" on ties so the selection stays minimal.
        if (table_[i][static_cast<std::size_t>(left)] == table_[i - 1][static_cast<std::size_t>(left)]) continue;
        chosen.push_back(static_cast<int>(i - 1));
        left -= items_[i - 1].min_cost;
    }
    std::reverse(chosen.begin(), chosen.end());
    return chosen;
}

SolveOutcome solve_cluster_dp(const Instance& instance) {
    instance.validate();
    const auto start = std::chrono::steady_clock::now();
    if (instance.num_candidates != 2) throw std::invalid_argument("cluster: needs exactly two candidates");
    if (instance.rule != Rule::Majority) throw std::invalid_argument("cluster: rule is not majority");
    if (!instance.network.is_symmetric_unit())
        throw std::invalid_argument("cluster: network is not symmetric with unit weights");
    const UndirectedGraph support = instance.network.undirected_support();
    const auto comps = support.components();
    for (const auto& comp : comps)
        for (int v : comp)
            if (support.degree(v) + 1 != static_cast<int>(comp.size()))
                throw std::invalid_argument("cluster: network is not a disjoint union of cliques");

    const std::int64_t target = instance.target_supporters();
    const int supporters = instance.initial_supporters();
    auto finish = [&](SolveOutcome out, std::uint64_t cells, size_t cliques) {
        out.stats.states = cells;
        out.stats.param = "r=" + std::to_string(cliques);
        out.stats.micros =
            std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
        return out;
    };
    if (supporters >= target)
        return finish(SolveOutcome::solved("cluster", 0, ShiftVector(instance.num_voters(), 0)), 0, comps.size());

    std::vector<CliqueSummary> summaries(comps.size());
    std::vector<int> cheapest_member(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
        auto& summary = summaries[i];
        int cheap = comps[i][0];
        for (int v : comps[i]) {
            if (!instance.tops_preferred(v)) ++summary.gain;
            if (instance.unit_cost(v) < instance.unit_cost(cheap)) cheap = v;
        }
        summary.min_cost = instance.unit_cost(cheap);
        cheapest_member[i] = cheap;
    }

    // Spending more than the total of all clique costs is never useful.
    std::int64_t cost_sum = 0;
    for (const auto& s : summaries) cost_sum += s.min_cost;
    const std::int64_t effective_budget = std::min(instance.budget, cost_sum);

    ClusterKnapsack knapsack(summaries, effective_budget);
    const std::int64_t needed = target - supporters;
    std::int64_t best_cost = -1;
    for (std::int64_t d = 0; d <= effective_budget; ++d)
        if (knapsack.max_gain(d) >= needed) {
            best_cost = d;
            break;
        }
    if (best_cost < 0)
        return finish(SolveOutcome::infeasible_outcome("cluster"), knapsack.table_cells(), comps.size());

    ShiftVector witness(instance.num_voters(), 0);
    for (int idx : knapsack.selection(best_cost)) witness[cheapest_member[idx]] = 1;
    return finish(SolveOutcome::solved("cluster", best_cost, std::move(witness)), knapsack.table_cells(),
                  comps.size());
}

}  // namespace sbsn

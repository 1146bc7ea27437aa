#include "sbsn/oracle.hpp"

#include <algorithm>
#include <chrono>

namespace sbsn {

namespace {

struct Search {
    const Instance& instance;
    std::int64_t cost_cap;
    int shift_cap;
    ShiftVector current;
    std::optional<std::int64_t> best_cost;
    ShiftVector best;
    std::uint64_t nodes = 0;

    // Lexicographic depth-first order: the first witness found at a given cost
    // is the lexicographically smallest one with that cost.
    void descend(int voter, std::int64_t cost_so_far) {
        ++nodes;
        if (voter == instance.num_voters()) {
            if (verify(instance, current) && (!best_cost || cost_so_far < *best_cost)) {
                best_cost = cost_so_far;
                best = current;
            }
            return;
        }
        for (int s = 0; s <= shift_cap; ++s) {
            const std::int64_t c = cost_so_far + instance.costs.per_voter[voter].eval(s, instance.num_candidates);
            if (c > cost_cap) continue;     // table costs need not be monotone in s
            if (best_cost && c >= *best_cost) continue;
            current[voter] = s;
            descend(voter + 1, c);
        }
        current[voter] = 0;
    }
};

}  // namespace

SolveOutcome brute_force_min_cost(const Instance& instance, const EnumerationBounds& bounds) {
    instance.validate();
    const auto start = std::chrono::steady_clock::now();
    Search search{
        .instance = instance,
        .cost_cap = bounds.max_total_cost.value_or(instance.budget),
        .shift_cap = bounds.per_voter_cap.value_or(instance.num_candidates - 1),
    };
    if (search.shift_cap < 0 || search.cost_cap < 0) throw std::invalid_argument("negative enumeration bound");
    search.shift_cap = std::min(search.shift_cap, instance.num_candidates - 1);
    search.current.assign(instance.num_voters(), 0);
    search.descend(0, 0);

    SolveOutcome out = search.best_cost ? SolveOutcome::solved("oracle", *search.best_cost, search.best)
                                        : SolveOutcome::infeasible_outcome("oracle");
    out.stats.nodes = search.nodes;
    out.stats.micros =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
    return out;
}

namespace {

bool choose(const UndirectedGraph& graph, int k, int t, int first, std::vector<int>& picked) {
    const int n = graph.num_vertices();
    if (static_cast<int>(picked.size()) == k) {
        std::vector<char> covered(n, 0);
        int count = 0;
        for (int v : picked) {
            if (!covered[v]) { covered[v] = 1; ++count; }
            for (int u : graph.neighbors(v))
                if (!covered[u]) { covered[u] = 1; ++count; }
        }
        return count >= t;
    }
    for (int v = first; v < n; ++v) {
        picked.push_back(v);
        if (choose(graph, k, t, v + 1, picked)) return true;
        picked.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> brute_force_partial_dominating(const UndirectedGraph& graph, int k, int t) {
    if (t <= 0) return std::vector<int>{};
    for (int size = 1; size <= std::min(k, graph.num_vertices()); ++size) {
        std::vector<int> picked;
        if (choose(graph, size, t, 0, picked)) return picked;
    }
    return std::nullopt;
}

std::optional<std::vector<int>> brute_force_dominating(const UndirectedGraph& graph, int k) {
    return brute_force_partial_dominating(graph, k, graph.num_vertices());
}

}  // namespace sbsn

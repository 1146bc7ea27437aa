#include "sbsn/detect.hpp"

#include <algorithm>
#include <numeric>

#include "sbsn/cluster.hpp"
#include "sbsn/oracle.hpp"
#include "sbsn/path_dp.hpp"
#include "sbsn/poly_solvers.hpp"
#include "sbsn/tree_decomposition.hpp"
#include "sbsn/treewidth_dp.hpp"

namespace sbsn {

namespace {

bool is_transitive_tournament(const InfluenceNetwork& network) {
    const int n = network.num_voters();
    if (!network.all_weights_one()) return false;
    if (static_cast<std::int64_t>(network.arcs().size()) != static_cast<std::int64_t>(n) * (n - 1) / 2) return false;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return network.out_neighbors(a).size() > network.out_neighbors(b).size();
    });
    for (int r = 0; r < n; ++r)
        if (static_cast<int>(network.out_neighbors(order[r]).size()) != n - 1 - r) return false;
    for (int r = 0; r < n; ++r)
        for (int q = r + 1; q < n; ++q)
            if (!network.has_arc(order[r], order[q])) return false;
    return true;
}

bool is_directed_path(const InfluenceNetwork& network) {
    const int n = network.num_voters();
    if (static_cast<int>(network.arcs().size()) != n - 1) return false;
    if (!network.all_weights_one()) return false;
    std::vector<int> out_deg(n, 0), in_deg(n, 0);
    for (const Arc& a : network.arcs()) {
        ++out_deg[a.from];
        ++in_deg[a.to];
    }
    int heads = 0;
    for (int v = 0; v < n; ++v) {
        if (out_deg[v] > 1 || in_deg[v] > 1) return false;
        if (out_deg[v] == 0) ++heads;
    }
    if (heads != 1) return false;
    // n-1 arcs with in/out degrees <= 1 and a single sink: one chain.
    return true;
}

bool is_cluster_network(const InfluenceNetwork& network) {
    if (!network.is_symmetric_unit()) return false;
    const UndirectedGraph support = network.undirected_support();
    for (const auto& comp : support.components())
        for (int v : comp)
            if (support.degree(v) + 1 != static_cast<int>(comp.size())) return false;
    return true;
}

}  // namespace

const char* to_string(GraphClass cls) {
    switch (cls) {
        case GraphClass::CompleteUnit: return "complete-unit";
        case GraphClass::TransitiveTournament: return "transitive-tournament";
        case GraphClass::Cluster: return "cluster";
        case GraphClass::DirectedPath: return "directed-path";
        case GraphClass::Forest: return "forest";
        case GraphClass::BoundedTreewidth: return "bounded-treewidth";
        case GraphClass::General: return "general";
    }
    return "unknown";
}

DetectedClass detect_class(const Instance& instance) {
    const InfluenceNetwork& network = instance.network;
    if (network.is_complete_unit()) return {GraphClass::CompleteUnit, -1};
    if (is_transitive_tournament(network)) return {GraphClass::TransitiveTournament, -1};
    if (is_cluster_network(network)) return {GraphClass::Cluster, -1};
    if (is_directed_path(network)) return {GraphClass::DirectedPath, -1};
    if (network.is_symmetric_unit()) {
        const UndirectedGraph support = network.undirected_support();
        if (support.is_forest()) return {GraphClass::Forest, -1};
        return {GraphClass::BoundedTreewidth, build_tree_decomposition(support).width()};
    }
    return {GraphClass::General, -1};
}

SolveOutcome solve_auto(const Instance& instance, const AutoSolveOptions& options) {
    instance.validate();
    const DetectedClass detected = detect_class(instance);
    const bool two_candidates = instance.num_candidates == 2;
    const bool unit_costs = [&] {
        for (int i = 0; i < instance.num_voters(); ++i)
            if (instance.unit_cost(i) != 1) return false;
        return true;
    }();

    switch (detected.cls) {
        case GraphClass::CompleteUnit:
            if (instance.costs.all_linear()) {
                if (instance.rule == Rule::Majority) return solve_complete_majority(instance);
                return solve_complete_plurality(instance);
            }
            break;
        case GraphClass::TransitiveTournament:
            if (two_candidates && unit_costs && instance.rule == Rule::Majority)
                return solve_transitive_tournament(instance);
            break;
        case GraphClass::Cluster:
            if (two_candidates && instance.rule == Rule::Majority) return solve_cluster_dp(instance);
            break;
        case GraphClass::DirectedPath:
            if (instance.costs.all_linear() && instance.rule == Rule::Majority) return solve_path_dp(instance);
            break;
        case GraphClass::Forest:
        case GraphClass::BoundedTreewidth:
            if (two_candidates && unit_costs && instance.rule == Rule::Majority) return solve_treewidth(instance);
            break;
        case GraphClass::General:
            break;
    }
    const std::int64_t size = static_cast<std::int64_t>(instance.num_voters()) * (instance.num_candidates - 1);
    if (size > options.oracle_guard)
        throw std::invalid_argument("no specialized solver applies and the instance exceeds the oracle size guard (" +
                                    std::to_string(size) + " > " + std::to_string(options.oracle_guard) +
                                    " enumeration bits); pass a larger guard to force the oracle");
    return brute_force_min_cost(instance);
}

}  // namespace sbsn

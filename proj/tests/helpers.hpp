#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sbsn/election.hpp"

namespace sbsn::testing {

struct InstanceBuilder {
    int m = 2;
    int preferred = 1;
    Rule rule = Rule::Majority;
    std::vector<std::vector<int>> rankings;
    std::vector<Arc> arcs;
    std::vector<VoterCost> costs;
    std::int64_t budget = 0;
    std::optional<std::int64_t> threshold;

    InstanceBuilder& with_budget(std::int64_t b) {
        budget = b;
        return *this;
    }

    Instance build() const {
        Instance instance;
        instance.num_candidates = m;
        instance.preferred = preferred;
        instance.rule = rule;
        instance.tiebreak.resize(m);
        for (int c = 0; c < m; ++c) instance.tiebreak[c] = c;
        instance.profile.rankings = rankings;
        instance.network = InfluenceNetwork(static_cast<int>(rankings.size()), arcs);
        instance.costs.per_voter = costs.empty() ? std::vector<VoterCost>(rankings.size(), VoterCost{}) : costs;
        instance.budget = budget;
        instance.supporter_threshold = threshold;
        instance.validate();
        return instance;
    }
};

// Two-candidate rankings from supporter flags (1 = tops the preferred candidate).
inline std::vector<std::vector<int>> rankings_from_flags(const std::vector<int>& tops_preferred) {
    std::vector<std::vector<int>> out;
    for (int flag : tops_preferred) out.push_back(flag ? std::vector<int>{1, 0} : std::vector<int>{0, 1});
    return out;
}

inline std::vector<Arc> symmetric_arcs(const std::vector<std::pair<int, int>>& edges) {
    std::vector<Arc> arcs;
    for (auto [u, v] : edges) {
        arcs.push_back({u, v, Rational::one()});
        arcs.push_back({v, u, Rational::one()});
    }
    return arcs;
}

inline VoterCost linear_cost(std::int64_t coeff) {
    VoterCost cost;
    cost.kind = CostKind::Linear;
    cost.coeff = coeff;
    return cost;
}

// Two-candidate instance over a symmetric unit network, identity costs.
inline Instance two_candidate_instance(const std::vector<int>& tops_preferred,
                                       const std::vector<std::pair<int, int>>& edges, std::int64_t budget) {
    InstanceBuilder builder;
    builder.rankings = rankings_from_flags(tops_preferred);
    builder.arcs = symmetric_arcs(edges);
    builder.budget = budget;
    return builder.build();
}

inline std::vector<std::pair<int, int>> cycle_edges(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return edges;
}

inline std::vector<std::pair<int, int>> path_edges(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return edges;
}

inline std::vector<std::pair<int, int>> star_edges(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return edges;
}

inline std::vector<std::pair<int, int>> complete_edges(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return edges;
}

}  // namespace sbsn::testing

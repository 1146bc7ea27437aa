#include "sbsn/reductions.hpp"

#include <stdexcept>

namespace sbsn {

namespace {

// All reduction instances share the two-candidate layout with candidate 1
// preferred and everyone initially against it.
Instance against_all_base(int num_voters) {
    Instance instance;
    instance.num_candidates = 2;
    instance.preferred = 1;
    instance.rule = Rule::Majority;
    instance.tiebreak = {0, 1};
    instance.profile.rankings.assign(num_voters, {0, 1});
    instance.costs.per_voter.assign(num_voters, VoterCost{});
    return instance;
}

void add_symmetric_unit(std::vector<Arc>& arcs, int u, int v) {
    arcs.push_back({u, v, Rational::one()});
    arcs.push_back({v, u, Rational::one()});
}

}  // namespace

ShiftVector ReductionRecord::map_solution(const std::vector<int>& chosen) const {
    ShiftVector s(instance.num_voters(), 0);
    for (int x : chosen) {
        if (x < 0 || x >= static_cast<int>(source_to_voter.size()))
            throw std::invalid_argument("solution element outside the source domain");
        s[source_to_voter[x]] = 1;
    }
    return s;
}

ReductionRecord reduce_ds_to_sbon_general(const UndirectedGraph& graph, int k) {
    const int n = graph.num_vertices();
    if (n < 1) throw std::invalid_argument("empty source graph");
    if (k < 0 || k > n) throw std::invalid_argument("k outside 0..n");

    ReductionRecord record;
    record.source = "dominating-set";
    record.params = {{"n", n}, {"k", k}};
    record.instance = against_all_base(2 * n - 1);
    record.instance.budget = k;
    std::vector<Arc> arcs;
    for (auto [u, v] : graph.edges()) add_symmetric_unit(arcs, u, v);
    record.instance.network = InfluenceNetwork(2 * n - 1, std::move(arcs));
    record.source_to_voter.resize(n);
    for (int v = 0; v < n; ++v) record.source_to_voter[v] = v;
    record.instance.validate();
    return record;
}

ReductionRecord reduce_ds_to_sbon_complete(const UndirectedGraph& graph, int k) {
    const int n = graph.num_vertices();
    if (n < 1) throw std::invalid_argument("empty source graph");
    if (k < 1 || k > n) throw std::invalid_argument("k outside 1..n (padding weight needs k >= 1)");

    ReductionRecord record;
    record.source = "dominating-set-complete";
    record.params = {{"n", n}, {"k", k}};
    const int total = 2 * n - 1;
    record.instance = against_all_base(total);
    record.instance.budget = k;
    for (int v = n; v < total; ++v) {
        record.instance.costs.per_voter[v].kind = CostKind::Linear;
        record.instance.costs.per_voter[v].coeff = k + 1;
    }
    const Rational weak(1, 2LL * k);
    std::vector<Arc> arcs;
    for (int u = 0; u < total; ++u)
        for (int v = u + 1; v < total; ++v) {
            const bool original = u < n && v < n && graph.has_edge(u, v);
            const Rational w = original ? Rational::one() : weak;
            arcs.push_back({u, v, w});
            arcs.push_back({v, u, w});
        }
    record.instance.network = InfluenceNetwork(total, std::move(arcs));
    record.source_to_voter.resize(n);
    for (int v = 0; v < n; ++v) record.source_to_voter[v] = v;
    record.instance.validate();
    return record;
}

ReductionRecord reduce_setcover_to_sbon_bipartite(int universe_size, const std::vector<std::vector<int>>& sets, int k,
                                                  bool directed) {
    const int n = universe_size;
    const int m = static_cast<int>(sets.size());
    if (n < 1 || m < 1) throw std::invalid_argument("set cover needs a non-empty universe and family");
    if (k < 1 || k > m) throw std::invalid_argument("k outside 1..m");
    for (const auto& set : sets)
        for (int e : set)
            if (e < 0 || e >= n) throw std::invalid_argument("set element outside the universe");

    // Layout: elements, sets, the voters adjacent to every set, then the
    // isolated ones. 2(n+m) voters in total.
    const int elements_at = 0;
    const int sets_at = n;
    const int full_at = n + m;
    const int total = 2 * (n + m);
    const int full_count = m - k + 1;

    ReductionRecord record;
    record.source = "set-cover";
    record.params = {{"n", n}, {"m", m}, {"k", k}, {"directed", directed ? 1 : 0}};
    record.instance = against_all_base(total);
    record.instance.budget = k;
    record.instance.supporter_threshold = n + m + 1;

    std::vector<Arc> arcs;
    auto add_edge = [&](int set_voter, int left_voter) {
        arcs.push_back({set_voter, left_voter, Rational::one()});
        if (!directed) arcs.push_back({left_voter, set_voter, Rational::one()});
    };
    for (int i = 0; i < m; ++i)
        for (int e : sets[i]) add_edge(sets_at + i, elements_at + e);
    for (int i = 0; i < m; ++i)
        for (int f = 0; f < full_count; ++f) add_edge(sets_at + i, full_at + f);
    record.instance.network = InfluenceNetwork(total, std::move(arcs));

    record.source_to_voter.resize(m);
    for (int i = 0; i < m; ++i) record.source_to_voter[i] = sets_at + i;
    record.instance.validate();
    return record;
}

ReductionRecord reduce_ktds_to_sbon(const UndirectedGraph& graph, int k, int t) {
    const int n = graph.num_vertices();
    if (n < 1) throw std::invalid_argument("empty source graph");
    if (k < 0) throw std::invalid_argument("negative k");
    if (t < 0 || t > n) throw std::invalid_argument("t outside 0..n");

    ReductionRecord record;
    record.source = "ktds";
    record.params = {{"n", n}, {"k", k}, {"t", t}};
    record.instance = against_all_base(n);
    record.instance.budget = k;
    record.instance.supporter_threshold = t;
    std::vector<Arc> arcs;
    for (auto [u, v] : graph.edges()) add_symmetric_unit(arcs, u, v);
    record.instance.network = InfluenceNetwork(n, std::move(arcs));
    record.source_to_voter.resize(n);
    for (int v = 0; v < n; ++v) record.source_to_voter[v] = v;
    record.instance.validate();
    return record;
}

PaddedKtds pad_ds_to_ktds(const UndirectedGraph& graph, int k) {
    const int n = graph.num_vertices();
    if (n < 1) throw std::invalid_argument("empty source graph");
    UndirectedGraph padded(2 * n - 1);
    for (auto [u, v] : graph.edges()) padded.add_edge(u, v);
    return PaddedKtds{std::move(padded), k, n};
}

}  // namespace sbsn

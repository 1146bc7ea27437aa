#include "sbsn/generate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sbsn {

int Rng::uniform(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("empty uniform range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
    std::uint64_t draw = next();
    while (draw >= limit) draw = next();
    return lo + static_cast<int>(draw % span);
}

namespace {

std::vector<int> random_ranking(Rng& rng, int m, int preferred, bool supporter) {
    std::vector<int> others;
    for (int c = 0; c < m; ++c)
        if (c != preferred) others.push_back(c);
    rng.shuffle(others);
    std::vector<int> ranking;
    const int position = supporter ? 0 : rng.uniform(1, m - 1);
    for (int p = 0, o = 0; p < m; ++p)
        ranking.push_back(p == position ? preferred : others[o++]);
    return ranking;
}

Instance base_instance(const GeneratorOptions& options, Rng& rng) {
    Instance instance;
    instance.num_candidates = options.num_candidates;
    instance.preferred = options.num_candidates > 1 ? 1 : 0;
    instance.rule = options.rule;
    instance.tiebreak.resize(options.num_candidates);
    std::iota(instance.tiebreak.begin(), instance.tiebreak.end(), 0);
    instance.budget = options.budget >= 0 ? options.budget : std::max(1, options.num_voters / 3);
    for (int i = 0; i < options.num_voters; ++i) {
        instance.profile.rankings.push_back(
            random_ranking(rng, options.num_candidates, instance.preferred, rng.chance(options.supporter_fraction)));
        VoterCost cost;
        cost.kind = options.cost;
        if (options.cost == CostKind::Linear) {
            cost.coeff = rng.uniform(1, 5);
        } else if (options.cost == CostKind::Table) {
            cost.table.assign(options.num_candidates, 0);
            for (int s = 1; s < options.num_candidates; ++s)
                cost.table[s] = cost.table[s - 1] + rng.uniform(0, 4);
        }
        instance.costs.per_voter.push_back(std::move(cost));
    }
    return instance;
}

std::vector<Arc> symmetric_unit_arcs(const std::vector<std::pair<int, int>>& edges) {
    std::vector<Arc> arcs;
    arcs.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        arcs.push_back({u, v, Rational::one()});
        arcs.push_back({v, u, Rational::one()});
    }
    return arcs;
}

}  // namespace

Instance generate_complete(const GeneratorOptions& options, std::uint64_t seed) {
    Rng rng(seed);
    Instance instance = base_instance(options, rng);
    const int n = options.num_voters;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    instance.network = InfluenceNetwork(n, symmetric_unit_arcs(edges));
    instance.validate();
    return instance;
}

Instance generate_tournament(const GeneratorOptions& options, std::uint64_t seed) {
    GeneratorOptions fixed = options;
    fixed.num_candidates = 2;
    fixed.cost = CostKind::Identity;
    fixed.rule = Rule::Majority;
    Rng rng(seed);
    Instance instance = base_instance(fixed, rng);
    const int n = fixed.num_voters;
    std::vector<int> hierarchy(n);
    std::iota(hierarchy.begin(), hierarchy.end(), 0);
    rng.shuffle(hierarchy);
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) arcs.push_back({hierarchy[i], hierarchy[j], Rational::one()});
    instance.network = InfluenceNetwork(n, std::move(arcs));
    instance.validate();
    return instance;
}

Instance generate_cluster(const GeneratorOptions& options, std::uint64_t seed) {
    GeneratorOptions fixed = options;
    fixed.num_candidates = 2;
    fixed.rule = Rule::Majority;
    Rng rng(seed);
    Instance instance = base_instance(fixed, rng);
    const int n = fixed.num_voters;
    std::vector<std::pair<int, int>> edges;
    int start = 0;
    while (start < n) {
        const int size = std::min(n - start, rng.uniform(1, 4));
        for (int u = start; u < start + size; ++u)
            for (int v = u + 1; v < start + size; ++v) edges.emplace_back(u, v);
        start += size;
    }
    instance.network = InfluenceNetwork(n, symmetric_unit_arcs(edges));
    instance.validate();
    return instance;
}

Instance generate_path(const GeneratorOptions& options, std::uint64_t seed) {
    GeneratorOptions fixed = options;
    fixed.rule = Rule::Majority;
    if (fixed.cost == CostKind::Table) fixed.cost = CostKind::Linear;
    Rng rng(seed);
    Instance instance = base_instance(fixed, rng);
    const int n = fixed.num_voters;
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < n; ++i) arcs.push_back({i + 1, i, Rational::one()});
    instance.network = InfluenceNetwork(n, std::move(arcs));
    instance.validate();
    return instance;
}

Instance generate_forest(const GeneratorOptions& options, std::uint64_t seed) {
    GeneratorOptions fixed = options;
    fixed.num_candidates = 2;
    fixed.cost = CostKind::Identity;
    fixed.rule = Rule::Majority;
    Rng rng(seed);
    Instance instance = base_instance(fixed, rng);
    const int n = fixed.num_voters;
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        if (rng.chance(0.8)) edges.emplace_back(rng.uniform(0, v - 1), v);
    instance.network = InfluenceNetwork(n, symmetric_unit_arcs(edges));
    instance.validate();
    return instance;
}

Instance generate_general(const GeneratorOptions& options, std::uint64_t seed) {
    GeneratorOptions fixed = options;
    fixed.num_candidates = 2;
    fixed.cost = CostKind::Identity;
    fixed.rule = Rule::Majority;
    Rng rng(seed);
    Instance instance = base_instance(fixed, rng);
    const int n = fixed.num_voters;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(fixed.edge_probability)) edges.emplace_back(u, v);
    instance.network = InfluenceNetwork(n, symmetric_unit_arcs(edges));
    instance.validate();
    return instance;
}

Instance generate_class(const std::string& cls, const GeneratorOptions& options, std::uint64_t seed) {
    if (cls == "complete") return generate_complete(options, seed);
    if (cls == "tournament") return generate_tournament(options, seed);
    if (cls == "cluster") return generate_cluster(options, seed);
    if (cls == "path") return generate_path(options, seed);
    if (cls == "forest") return generate_forest(options, seed);
    if (cls == "general") return generate_general(options, seed);
    throw std::invalid_argument("unknown instance class: " + cls);
}

}  // namespace sbsn

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "sbsn/fpt.hpp"
#include "sbsn/generate.hpp"
#include "sbsn/oracle.hpp"
#include "sbsn/treewidth_dp.hpp"

using namespace sbsn;
using namespace sbsn::testing;

namespace {

UndirectedGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    UndirectedGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void check_matches_oracle(const Instance& instance, const SolveOutcome& out) {
    const SolveOutcome reference = brute_force_min_cost(instance);
    REQUIRE(out.feasible == reference.feasible);
    if (out.feasible) {
        CHECK(*out.cost == *reference.cost);
        CHECK(verify(instance, *out.witness));
    }
}

}  // namespace

TEST_CASE("deletion sets: forests and cluster graphs need nothing") {
    const UndirectedGraph tree = from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
    CHECK(find_deletion_set(tree, DeletionKind::FeedbackVertexSet).vertices.empty());

    const UndirectedGraph cliques = from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
    CHECK(find_deletion_set(cliques, DeletionKind::ClusterVertexDeletion).vertices.empty());
}

TEST_CASE("deletion sets on small gadgets") {
    const UndirectedGraph c4 = from_edges(4, cycle_edges(4));
    CHECK(find_deletion_set(c4, DeletionKind::FeedbackVertexSet).vertices.size() == 1);

    // Triangle with a pendant: deleting the attachment vertex kills every
    // induced path on three vertices.
    const UndirectedGraph paw = from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    const DeletionSet cvd = find_deletion_set(paw, DeletionKind::ClusterVertexDeletion);
    REQUIRE(cvd.vertices.size() == 1);
    std::vector<int> old_of_new;
    CHECK(paw.remove_vertices(cvd.vertices, &old_of_new).is_cluster_graph());

    // Two triangles sharing a vertex: one deletion breaks both cycles.
    const UndirectedGraph bowtie = from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    CHECK(find_deletion_set(bowtie, DeletionKind::FeedbackVertexSet).vertices == std::vector<int>{2});
}

TEST_CASE("deletion set results are minimum") {
    Rng rng(616);
    for (int round = 0; round < 25; ++round) {
        GeneratorOptions options;
        options.num_voters = rng.uniform(1, 8);
        options.edge_probability = 0.35;
        const UndirectedGraph g = generate_general(options, rng.next()).network.undirected_support();
        for (DeletionKind kind : {DeletionKind::FeedbackVertexSet, DeletionKind::ClusterVertexDeletion}) {
            const DeletionSet found = find_deletion_set(g, kind);
            auto leaves_target = [&](const std::vector<int>& removed) {
                const UndirectedGraph rest = g.remove_vertices(removed);
                return kind == DeletionKind::FeedbackVertexSet ? rest.is_forest() : rest.is_cluster_graph();
            };
            CHECK(leaves_target(found.vertices));
            // No smaller subset works: check every subset of size |found|-1.
            if (found.vertices.empty()) continue;
            const int n = g.num_vertices();
            const int want = static_cast<int>(found.vertices.size()) - 1;
            bool smaller_works = false;
            std::vector<int> subset;
            auto search = [&](auto&& self, int start) -> void {
                if (smaller_works) return;
                if (static_cast<int>(subset.size()) == want) {
                    if (leaves_target(subset)) smaller_works = true;
                    return;
                }
                for (int v = start; v < n; ++v) {
                    subset.push_back(v);
                    self(self, v + 1);
                    subset.pop_back();
                }
            };
            search(search, 0);
            CHECK_FALSE(smaller_works);
        }
    }
}

TEST_CASE("fvs solver equals the treewidth DP on forests") {
    Rng rng(123);
    for (int round = 0; round < 20; ++round) {
        GeneratorOptions options;
        options.num_voters = rng.uniform(1, 9);
        options.budget = rng.uniform(0, 4);
        Instance instance = generate_forest(options, rng.next());
        const SolveOutcome via_fvs = solve_via_fvs(instance);
        const SolveOutcome via_tw = solve_treewidth(instance);
        CHECK(via_fvs.feasible == via_tw.feasible);
        if (via_fvs.feasible) CHECK(*via_fvs.cost == *via_tw.cost);
        CHECK(via_fvs.stats.states == 1);  // empty deletion set: single branch
    }
}

TEST_CASE("fvs solver on cycles") {
    Instance c4 = two_candidate_instance({0, 0, 0, 0}, cycle_edges(4), 1);
    const SolveOutcome out = solve_via_fvs(c4);
    CHECK(out.feasible);
    CHECK(*out.cost == 1);
    check_matches_oracle(c4, out);

    // Five-cycle with a pendant on every vertex.
    std::vector<std::pair<int, int>> edges = cycle_edges(5);
    for (int i = 0; i < 5; ++i) edges.emplace_back(i, 5 + i);
    Instance ring = two_candidate_instance({0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, edges, 2);
    check_matches_oracle(ring, solve_via_fvs(ring));
}

TEST_CASE("fvs branch count is exactly two to the deletion set size") {
    Instance c4 = two_candidate_instance({0, 0, 0, 0}, cycle_edges(4), 1);
    CHECK(solve_via_fvs(c4).stats.states == 2);  // one cycle breaker

    std::vector<std::pair<int, int>> two_cycles = cycle_edges(3);
    two_cycles.emplace_back(3, 4);
    two_cycles.emplace_back(4, 5);
    two_cycles.emplace_back(3, 5);
    Instance pair = two_candidate_instance({0, 0, 0, 0, 0, 0}, two_cycles, 2);
    CHECK(solve_via_fvs(pair).stats.states == 4);
}

TEST_CASE("fvs residual accounts influence flowing back into the deletion set") {
    // Triangle 0-1-2 with a pendant 3 on vertex 1 and two isolated voters.
    // The only optimal move is bribing vertex 1, which the deletion vertex
    // branch without it must still discover through the back influence.
    Instance instance =
        two_candidate_instance({0, 0, 0, 0, 0, 0}, {{0, 1}, {1, 2}, {0, 2}, {1, 3}}, 1);
    const SolveOutcome out = solve_via_fvs(instance);
    CHECK(out.feasible);
    CHECK(*out.cost == 1);
    check_matches_oracle(instance, out);
}

TEST_CASE("fvs and cvd match the oracle on random graphs") {
    Rng rng(31337);
    for (int round = 0; round < 50; ++round) {
        GeneratorOptions options;
        options.num_voters = rng.uniform(1, 9);
        options.edge_probability = 0.2 + 0.05 * (round % 7);
        options.supporter_fraction = 0.25;
        options.budget = rng.uniform(0, 4);
        Instance instance = generate_general(options, rng.next());
        check_matches_oracle(instance, solve_via_fvs(instance));
        check_matches_oracle(instance, solve_via_cvd(instance));
    }
}

TEST_CASE("cvd solver with linear costs matches the oracle") {
    Rng rng(2718);
    for (int round = 0; round < 40; ++round) {
        GeneratorOptions options;
        options.num_voters = rng.uniform(1, 8);
        options.edge_probability = 0.3;
        options.budget = rng.uniform(0, 6);
        Instance instance = generate_general(options, rng.next());
        for (auto& cost : instance.costs.per_voter) {
            cost.kind = CostKind::Linear;
            cost.coeff = rng.uniform(0, 4);
        }
        check_matches_oracle(instance, solve_via_cvd(instance));
    }
}

TEST_CASE("cvd solver on cluster graphs uses the single empty branch") {
    Rng rng(99);
    for (int round = 0; round < 15; ++round) {
        GeneratorOptions options;
        options.num_voters = rng.uniform(1, 8);
        options.budget = rng.uniform(0, 4);
        Instance instance = generate_cluster(options, rng.next());
        const SolveOutcome out = solve_via_cvd(instance);
        CHECK(out.stats.states == 1);
        check_matches_oracle(instance, out);
    }
}

TEST_CASE("cvd connector example: two triangles joined through one vertex") {
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {6, 0}, {6, 3}};
    Instance instance = two_candidate_instance({0, 0, 0, 0, 0, 0, 0}, edges, 1);
    check_matches_oracle(instance, solve_via_cvd(instance));

    Instance broke = two_candidate_instance({0, 0, 0, 0, 0, 0, 0}, edges, 0);
    CHECK_FALSE(solve_via_cvd(broke).feasible);
}

TEST_CASE("partial domination solver basics") {
    Instance satisfied = two_candidate_instance({1, 1, 0}, {}, 0);
    const SolveOutcome zero = solve_via_partial_domination(satisfied);
    CHECK(zero.feasible);
    CHECK(*zero.cost == 0);

    Instance star7 = two_candidate_instance({0, 0, 0, 0, 0, 0, 0}, star_edges(6), 1);
    const SolveOutcome hub = solve_via_partial_domination(star7);
    CHECK(hub.feasible);
    CHECK(*hub.cost == 1);
    CHECK((*hub.witness)[0] == 1);

    // Two separate four-vertex stars: one bribe covers only four of the five
    // needed supporters.
    std::vector<std::pair<int, int>> two_stars = {{0, 1}, {0, 2}, {0, 3}, {4, 5}, {4, 6}, {4, 7}};
    Instance split = two_candidate_instance({0, 0, 0, 0, 0, 0, 0, 0}, two_stars, 1);
    CHECK_FALSE(solve_via_partial_domination(split).feasible);
}

TEST_CASE("partial domination respects the explicit search cap") {
    Instance pair = two_candidate_instance({0, 0, 0, 0}, {}, 4);
    CHECK(solve_via_partial_domination(pair, 3).feasible);
    CHECK_FALSE(solve_via_partial_domination(pair, 1).feasible);
}

TEST_CASE("partial domination matches the oracle and the subset enumeration") {
    Rng rng(404);
    for (int round = 0; round < 50; ++round) {
        GeneratorOptions options;
        options.num_voters = rng.uniform(1, 9);
        options.edge_probability = 0.25;
        options.supporter_fraction = 0.3;
        options.budget = rng.uniform(0, 5);
        Instance instance = generate_general(options, rng.next());
        const SolveOutcome out = solve_via_partial_domination(instance);
        check_matches_oracle(instance, out);

        // Smallest bribe set covering the missing supporters, by enumeration.
        const int n = instance.num_voters();
        const std::int64_t missing =
            std::max<std::int64_t>(0, instance.majority_quota() - instance.initial_supporters());
        const UndirectedGraph support = instance.network.undirected_support();
        int smallest = -1;
        for (int size = 0; size <= n && smallest < 0; ++size) {
            std::vector<int> subset;
            auto covers = [&]() {
                std::vector<char> covered(n, 0);
                for (int v : subset) {
                    covered[v] = 1;
                    for (int u : support.neighbors(v)) covered[u] = 1;
                }
                std::int64_t fresh = 0;
                for (int v = 0; v < n; ++v)
                    if (covered[v] && !instance.tops_preferred(v)) ++fresh;
                return fresh >= missing;
            };
            auto search = [&](auto&& self, int start) -> bool {
                if (static_cast<int>(subset.size()) == size) return covers();
                for (int v = start; v < n; ++v) {
                    subset.push_back(v);
                    if (self(self, v + 1)) return true;
                    subset.pop_back();
                }
                return false;
            };
            if (search(search, 0)) smallest = size;
        }
        if (smallest >= 0 && smallest <= instance.budget) {
            REQUIRE(out.feasible);
            CHECK(*out.cost == smallest);
        } else {
            CHECK_FALSE(out.feasible);
        }
    }
}

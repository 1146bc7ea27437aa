#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "sbsn/generate.hpp"
#include "sbsn/oracle.hpp"

using namespace sbsn;
using namespace sbsn::testing;

TEST_CASE("oracle trivial cases") {
    Instance already_won = two_candidate_instance({1}, {}, 0);
    const SolveOutcome a = brute_force_min_cost(already_won);
    CHECK(a.feasible);
    CHECK(*a.cost == 0);
    CHECK(*a.witness == ShiftVector{0});

    // Three isolated opponents need two flips; budget one is not enough.
    Instance isolated = two_candidate_instance({0, 0, 0}, {}, 1);
    CHECK_FALSE(brute_force_min_cost(isolated).feasible);
}

TEST_CASE("oracle on the three-voter influence chain") {
    InstanceBuilder builder;
    builder.rankings = rankings_from_flags({0, 0, 0});
    builder.arcs = {{2, 1, Rational::one()}, {1, 0, Rational::one()}};
    builder.budget = 1;
    const SolveOutcome out = brute_force_min_cost(builder.build());
    CHECK(out.feasible);
    CHECK(*out.cost == 1);
    // Both single bribes that convince two voters work; the witness is the
    // lexicographically smallest one.
    CHECK(*out.witness == ShiftVector{0, 0, 1});
}

TEST_CASE("oracle witnesses always pass verify and feasibility is monotone in the budget") {
    Rng rng(5150);
    for (int round = 0; round < 40; ++round) {
        GeneratorOptions options;
        options.num_voters = rng.uniform(1, 6);
        options.num_candidates = rng.uniform(2, 3);
        options.budget = rng.uniform(0, 4);
        Instance instance = generate_general(options, rng.next());
        const SolveOutcome out = brute_force_min_cost(instance);
        if (out.feasible) {
            CHECK(verify(instance, *out.witness));
            CHECK(shift_cost(instance, *out.witness) == *out.cost);
            Instance richer = instance;
            richer.budget += 1;
            CHECK(brute_force_min_cost(richer).feasible);
        } else {
            Instance poorer = instance;
            if (poorer.budget > 0) {
                poorer.budget -= 1;
                CHECK_FALSE(brute_force_min_cost(poorer).feasible);
            }
        }
    }
}

TEST_CASE("enumeration bounds cap the search") {
    Instance instance = two_candidate_instance({0, 0, 0}, {}, 3);
    EnumerationBounds bounds;
    bounds.max_total_cost = 1;
    CHECK_FALSE(brute_force_min_cost(instance, bounds).feasible);  // needs 2 flips
    bounds.max_total_cost = 2;
    CHECK(brute_force_min_cost(instance, bounds).feasible);
}

TEST_CASE("partial dominating set enumeration") {
    UndirectedGraph star(4);
    for (int leaf = 1; leaf <= 3; ++leaf) star.add_edge(0, leaf);
    const auto center = brute_force_partial_dominating(star, 1, 4);
    REQUIRE(center.has_value());
    CHECK(*center == std::vector<int>{0});

    UndirectedGraph edgeless(4);
    CHECK_FALSE(brute_force_partial_dominating(edgeless, 1, 2).has_value());

    UndirectedGraph p5(5);
    for (int i = 0; i + 1 < 5; ++i) p5.add_edge(i, i + 1);
    const auto internal = brute_force_partial_dominating(p5, 1, 3);
    REQUIRE(internal.has_value());
    REQUIRE(internal->size() == 1);
    const int v = internal->front();
    CHECK(v >= 1);
    CHECK(v <= 3);

    CHECK(brute_force_partial_dominating(star, 0, 0).has_value());  // empty set suffices for t=0
}

TEST_CASE("dominating set enumeration") {
    UndirectedGraph k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    const auto single = brute_force_dominating(k4, 1);
    REQUIRE(single.has_value());
    CHECK(single->size() == 1);

    UndirectedGraph c6(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    CHECK(brute_force_dominating(c6, 2).has_value());

    UndirectedGraph c7(7);
    for (int i = 0; i < 7; ++i) c7.add_edge(i, (i + 1) % 7);
    CHECK_FALSE(brute_force_dominating(c7, 2).has_value());
}

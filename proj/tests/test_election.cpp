#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "sbsn/election.hpp"
#include "sbsn/generate.hpp"

using namespace sbsn;
using namespace sbsn::testing;

TEST_CASE("effective shifts follow one-hop floor propagation") {
    // Unit arcs 2->1 and 1->0; bribing the tail reaches only its direct target.
    InstanceBuilder builder;
    builder.rankings = rankings_from_flags({0, 0, 0});
    builder.arcs = {{2, 1, Rational::one()}, {1, 0, Rational::one()}};
    Instance instance = builder.build();
    CHECK(effective_shifts(instance, {0, 0, 1}) == std::vector<std::int64_t>{0, 1, 1});
    CHECK(effective_shifts(instance, {0, 0, 0}) == std::vector<std::int64_t>{0, 0, 0});
}

TEST_CASE("fractional weights floor to zero below one") {
    InstanceBuilder builder;
    builder.rankings = rankings_from_flags({0, 0});
    builder.arcs = {{1, 0, Rational(1, 2)}};
    Instance instance = builder.build();
    CHECK(effective_shifts(instance, {0, 1}) == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("effective shifts reject dimension mismatches") {
    Instance instance = two_candidate_instance({0, 0}, {}, 0);
    CHECK_THROWS_AS(effective_shifts(instance, {0}), std::invalid_argument);
    CHECK_THROWS_AS(effective_shifts(instance, {0, 2}), std::invalid_argument);
}

TEST_CASE("apply_shift moves the preferred candidate left and clamps at the top") {
    InstanceBuilder builder;
    builder.m = 3;
    builder.preferred = 2;
    builder.rankings = {{0, 1, 2}};
    Instance instance = builder.build();
    CHECK(apply_shift(instance, {2}).rankings[0] == std::vector<int>{2, 0, 1});
    CHECK(apply_shift(instance, {0}).rankings[0] == std::vector<int>{0, 1, 2});

    // Effective shift 5 through a heavy arc still stops at position one.
    InstanceBuilder clamp;
    clamp.rankings = rankings_from_flags({0, 0});
    clamp.arcs = {{1, 0, Rational(5, 1)}};
    Instance clamped = clamp.build();
    CHECK(apply_shift(clamped, {0, 1}).rankings[0] == std::vector<int>{1, 0});
}

TEST_CASE("winner handles majority quota, ties and the plurality tiebreak") {
    PreferenceProfile majority_profile{{{0, 1}, {1, 0}, {1, 0}}};
    CHECK(winner(majority_profile, Rule::Majority, {0, 1}) == 1);

    PreferenceProfile tied{{{0, 1}, {1, 0}}};
    CHECK(winner(tied, Rule::Majority, {0, 1}) == kNoMajority);

    PreferenceProfile plurality_profile{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
    CHECK(winner(plurality_profile, Rule::Plurality, {0, 1, 2}) == 0);
    CHECK(winner(plurality_profile, Rule::Plurality, {2, 1, 0}) == 2);

    PreferenceProfile three{{{0, 1, 2}}};
    CHECK_THROWS_AS(winner(three, Rule::Majority, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("shift cost sums the per-voter functions") {
    Instance identity = two_candidate_instance({0, 0, 0}, {}, 0);
    CHECK(shift_cost(identity, {1, 0, 1}) == 2);
    CHECK(shift_cost(identity, {0, 0, 0}) == 0);

    InstanceBuilder linear;
    linear.m = 3;
    linear.rankings = {{0, 1, 2}, {0, 1, 2}};
    linear.costs = {linear_cost(3), linear_cost(5)};
    Instance with_coeffs = linear.build();
    CHECK(shift_cost(with_coeffs, {2, 0}) == 6);
}

TEST_CASE("verify checks budget and the win condition") {
    Instance winning = two_candidate_instance({1, 1, 0}, {}, 0);
    CHECK(verify(winning, {0, 0, 0}));

    Instance broke = two_candidate_instance({0, 0, 0}, {}, 0);
    CHECK_FALSE(verify(broke, {1, 0, 0}));

    // Influence chain: one bribe at the tail convinces two of three voters.
    InstanceBuilder path;
    path.rankings = rankings_from_flags({0, 0, 0});
    path.arcs = {{2, 1, Rational::one()}, {1, 0, Rational::one()}};
    path.budget = 1;
    CHECK(verify(path.build(), {0, 0, 1}));
}

TEST_CASE("supporter threshold overrides the rule-based win") {
    InstanceBuilder builder;
    builder.rankings = rankings_from_flags({1, 0, 0, 0});
    builder.budget = 1;
    builder.threshold = 2;
    Instance instance = builder.build();
    CHECK(verify(instance, {0, 1, 0, 0}));   // 2 supporters reach t=2
    CHECK_FALSE(verify(instance, {0, 0, 0, 0}));
}

TEST_CASE("propagation is one-hop: sources with zero shift never matter") {
    Rng rng(1234);
    for (int round = 0; round < 50; ++round) {
        const int n = rng.uniform(2, 6);
        GeneratorOptions options;
        options.num_voters = n;
        Instance instance = generate_general(options, rng.next());
        ShiftVector s(n, 0);
        int zero_voter = rng.uniform(0, n - 1);
        for (int i = 0; i < n; ++i)
            if (i != zero_voter) s[i] = rng.uniform(0, 1);
        const auto before = effective_shifts(instance, s);

        // Add a fresh arc out of the zero-shift voter.
        int target = rng.uniform(0, n - 1);
        while (target == zero_voter) target = rng.uniform(0, n - 1);
        if (instance.network.has_arc(zero_voter, target)) continue;
        std::vector<Arc> arcs = instance.network.arcs();
        arcs.push_back({zero_voter, target, Rational::one()});
        instance.network = InfluenceNetwork(n, std::move(arcs));
        CHECK(effective_shifts(instance, s) == before);
    }
}

TEST_CASE("effective shifts are monotone in the shift vector") {
    Rng rng(99);
    for (int round = 0; round < 50; ++round) {
        GeneratorOptions options;
        options.num_voters = rng.uniform(2, 6);
        Instance instance = generate_general(options, rng.next());
        const int n = instance.num_voters();
        const int cap = instance.num_candidates - 1;
        ShiftVector low(n), high(n);
        for (int i = 0; i < n; ++i) {
            low[i] = rng.uniform(0, cap);
            high[i] = rng.uniform(low[i], cap);
        }
        const auto a = effective_shifts(instance, low);
        const auto b = effective_shifts(instance, high);
        for (int i = 0; i < n; ++i) CHECK(a[i] <= b[i]);
    }
}

TEST_CASE("apply_shift keeps every ranking a permutation") {
    Rng rng(7);
    for (int round = 0; round < 50; ++round) {
        GeneratorOptions options;
        options.num_voters = rng.uniform(1, 6);
        options.num_candidates = rng.uniform(2, 4);
        Instance instance = generate_complete(options, rng.next());
        ShiftVector s(instance.num_voters());
        for (int& v : s) v = rng.uniform(0, instance.num_candidates - 1);
        const PreferenceProfile shifted = apply_shift(instance, s);
        shifted.validate(instance.num_candidates);
    }
}

TEST_CASE("with unit weights and two candidates a voter tops c iff bribed, influenced or loyal") {
    Rng rng(31);
    for (int round = 0; round < 50; ++round) {
        GeneratorOptions options;
        options.num_voters = rng.uniform(2, 7);
        Instance instance = generate_general(options, rng.next());
        const int n = instance.num_voters();
        ShiftVector s(n);
        for (int& v : s) v = rng.uniform(0, 1);
        const PreferenceProfile shifted = apply_shift(instance, s);
        for (int i = 0; i < n; ++i) {
            bool bribed_neighbor = false;
            for (const auto& [j, w] : instance.network.in_arcs(i))
                if (s[j] == 1) bribed_neighbor = true;
            const bool expect = s[i] == 1 || bribed_neighbor || instance.tops_preferred(i);
            CHECK((shifted.rankings[i][0] == instance.preferred) == expect);
        }
    }
}

TEST_CASE("instance validation rejects inconsistent data") {
    InstanceBuilder builder;
    builder.rankings = rankings_from_flags({0, 0});
    builder.costs = {VoterCost{}};  // one cost for two voters
    CHECK_THROWS_AS(builder.build(), std::invalid_argument);

    InstanceBuilder bad_ranking;
    bad_ranking.rankings = {{0, 0}};
    CHECK_THROWS_AS(bad_ranking.build(), std::invalid_argument);

    InstanceBuilder self_arc;
    self_arc.rankings = rankings_from_flags({0});
    self_arc.arcs = {{0, 0, Rational::one()}};
    CHECK_THROWS_AS(self_arc.build(), std::invalid_argument);

    InstanceBuilder bad_table;
    bad_table.rankings = rankings_from_flags({0});
    VoterCost table;
    table.kind = CostKind::Table;
    table.table = {1, 2};  // cost of zero shift must be zero
    bad_table.costs = {table};
    CHECK_THROWS_AS(bad_table.build(), std::invalid_argument);
}

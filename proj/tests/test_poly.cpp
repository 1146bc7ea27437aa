#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "sbsn/generate.hpp"
#include "sbsn/oracle.hpp"
#include "sbsn/poly_solvers.hpp"

using namespace sbsn;
using namespace sbsn::testing;

namespace {

Instance complete_instance(const std::vector<int>& ranks_to_top, int m, Rule rule,
                           const std::vector<std::int64_t>& coeffs, std::int64_t budget) {
    InstanceBuilder builder;
    builder.m = m;
    builder.preferred = m - 1;
    builder.rule = rule;
    builder.budget = budget;
    const int n = static_cast<int>(ranks_to_top.size());
    for (int i = 0; i < n; ++i) {
        std::vector<int> ranking;
        for (int c = 0; c < m - 1; ++c) ranking.push_back(c);
        ranking.insert(ranking.begin() + ranks_to_top[i], m - 1);
        builder.rankings.push_back(std::move(ranking));
        builder.costs.push_back(linear_cost(coeffs.empty() ? 1 : coeffs[i]));
    }
    builder.arcs = symmetric_arcs(complete_edges(n));
    return builder.build();
}

void check_matches_oracle(const Instance& instance, const SolveOutcome& out) {
    const SolveOutcome reference = brute_force_min_cost(instance);
    REQUIRE(out.feasible == reference.feasible);
    if (out.feasible) {
        CHECK(*out.cost == *reference.cost);
        CHECK(verify(instance, *out.witness));
    }
}

bool wins_at(const Instance& instance, int alpha) {
    PreferenceProfile shifted = instance.profile;
    for (int i = 0; i < instance.num_voters(); ++i) {
        const int pos = instance.shifts_to_top(i);
        const int move = std::min(alpha, pos);
        if (move == 0) continue;
        auto& r = shifted.rankings[i];
        r.erase(r.begin() + pos);
        r.insert(r.begin() + (pos - move), instance.preferred);
    }
    return preferred_wins(instance, shifted);
}

}  // namespace

TEST_CASE("complete majority: worked examples") {
    // Ranks 1,2,3 with unit coefficients: one shift reaches the quota.
    Instance three = complete_instance({0, 1, 2}, 3, Rule::Majority, {1, 1, 1}, 1);
    const SolveOutcome out = solve_complete_majority(three);
    CHECK(out.feasible);
    CHECK(*out.cost == 1);
    check_matches_oracle(three, out);

    Instance won = complete_instance({0, 0, 1}, 2, Rule::Majority, {}, 0);
    const SolveOutcome zero = solve_complete_majority(won);
    CHECK(zero.feasible);
    CHECK(*zero.cost == 0);

    // Both voters need one shift; the cheap coefficient is still above budget.
    Instance expensive = complete_instance({1, 1}, 2, Rule::Majority, {4, 7}, 3);
    CHECK_FALSE(solve_complete_majority(expensive).feasible);
    check_matches_oracle(expensive, solve_complete_majority(expensive));
}

TEST_CASE("complete plurality: worked examples") {
    // Every voter ranks the preferred candidate second behind a distinct rival.
    InstanceBuilder distinct;
    distinct.m = 4;
    distinct.preferred = 3;
    distinct.rule = Rule::Plurality;
    distinct.rankings = {{0, 3, 1, 2}, {1, 3, 0, 2}, {2, 3, 0, 1}};
    distinct.arcs = symmetric_arcs(complete_edges(3));
    distinct.budget = 1;
    Instance spread = distinct.build();
    const SolveOutcome out = solve_complete_plurality(spread);
    CHECK(out.feasible);
    CHECK(*out.cost == 1);
    check_matches_oracle(spread, out);

    // Already the plurality winner.
    InstanceBuilder winning;
    winning.m = 3;
    winning.preferred = 2;
    winning.rule = Rule::Plurality;
    winning.rankings = {{2, 0, 1}, {2, 1, 0}, {0, 1, 2}};
    winning.arcs = symmetric_arcs(complete_edges(3));
    Instance won = winning.build();
    const SolveOutcome zero = solve_complete_plurality(won);
    CHECK(zero.feasible);
    CHECK(*zero.cost == 0);

    // The preferred candidate trails by two in two votes; unit budget fails.
    InstanceBuilder trailing;
    trailing.m = 3;
    trailing.preferred = 2;
    trailing.rule = Rule::Plurality;
    trailing.rankings = {{0, 1, 2}, {0, 1, 2}, {0, 2, 1}};
    trailing.arcs = symmetric_arcs(complete_edges(3));
    trailing.budget = 1;
    Instance tight = trailing.build();
    CHECK_FALSE(solve_complete_plurality(tight).feasible);
    Instance relaxed = tight;
    relaxed.budget = 2;
    const SolveOutcome two = solve_complete_plurality(relaxed);
    CHECK(two.feasible);
    CHECK(*two.cost == 2);
}

TEST_CASE("complete solvers reject wrong inputs") {
    Instance path3 = two_candidate_instance({0, 0, 0}, path_edges(3), 1);
    CHECK_THROWS_AS(solve_complete_majority(path3), std::invalid_argument);

    Instance complete = complete_instance({1, 1}, 2, Rule::Majority, {}, 1);
    CHECK_THROWS_AS(solve_complete_plurality(complete), std::invalid_argument);  // rule mismatch

    Instance plurality = complete_instance({1, 1}, 2, Rule::Plurality, {}, 1);
    CHECK_THROWS_AS(solve_complete_majority(plurality), std::invalid_argument);

    Instance tables = complete_instance({1, 1}, 2, Rule::Majority, {}, 1);
    VoterCost table;
    table.kind = CostKind::Table;
    table.table = {0, 2};
    tables.costs.per_voter[0] = table;
    CHECK_THROWS_AS(solve_complete_majority(tables), std::invalid_argument);
}

TEST_CASE("uniform shift equivalence on complete unit networks") {
    Rng rng(14);
    for (int round = 0; round < 40; ++round) {
        GeneratorOptions options;
        options.num_voters = rng.uniform(1, 7);
        options.num_candidates = rng.uniform(2, 4);
        Instance instance = generate_complete(options, rng.next());
        ShiftVector s(instance.num_voters());
        std::int64_t alpha = 0;
        for (int& v : s) {
            v = rng.uniform(0, instance.num_candidates - 1);
            alpha += v;
        }
        for (std::int64_t eff : effective_shifts(instance, s)) CHECK(eff == alpha);
    }
}

TEST_CASE("plurality win predicate is monotone and tight at a listed threshold") {
    Rng rng(21);
    for (int round = 0; round < 60; ++round) {
        GeneratorOptions options;
        options.num_voters = rng.uniform(1, 7);
        options.num_candidates = rng.uniform(2, 4);
        options.rule = Rule::Plurality;
        options.supporter_fraction = 0.2;
        Instance instance = generate_complete(options, rng.next());
        int first_win = -1;
        bool seen_win = false;
        for (int alpha = 0; alpha < instance.num_candidates; ++alpha) {
            const bool wins = wins_at(instance, alpha);
            if (wins && !seen_win) {
                first_win = alpha;
                seen_win = true;
            }
            if (seen_win) CHECK(wins);  // once winning, always winning
        }
        REQUIRE(seen_win);  // the largest uniform shift tops every ballot
        bool listed = first_win == 0;
        for (int i = 0; i < instance.num_voters() && !listed; ++i)
            listed = instance.shifts_to_top(i) == first_win;
        CHECK(listed);
    }
}

TEST_CASE("complete solvers match the oracle on random instances") {
    Rng rng(2023);
    for (int round = 0; round < 60; ++round) {
        GeneratorOptions options;
        options.num_voters = rng.uniform(1, 6);
        options.num_candidates = rng.uniform(2, 3);
        options.cost = round % 2 ? CostKind::Linear : CostKind::Identity;
        options.budget = rng.uniform(0, 5);
        options.rule = round % 3 ? Rule::Plurality : Rule::Majority;
        Instance instance = generate_complete(options, rng.next());
        const SolveOutcome out = instance.rule == Rule::Majority ? solve_complete_majority(instance)
                                                                 : solve_complete_plurality(instance);
        check_matches_oracle(instance, out);
    }
}

TEST_CASE("transitive tournament: worked examples") {
    GeneratorOptions options;
    options.num_voters = 4;
    options.supporter_fraction = 0.0;
    Instance nobody = generate_tournament(options, 9);
    nobody.budget = 1;
    const SolveOutcome out = solve_transitive_tournament(nobody);
    CHECK(out.feasible);
    CHECK(*out.cost == 1);
    // The bribed voter is the hierarchy source (out-degree n-1).
    int bribed = -1;
    for (int i = 0; i < 4; ++i)
        if ((*out.witness)[i]) bribed = i;
    REQUIRE(bribed >= 0);
    CHECK(nobody.network.out_neighbors(bribed).size() == 3);
    check_matches_oracle(nobody, out);

    Instance broke = nobody;
    broke.budget = 0;
    CHECK_FALSE(solve_transitive_tournament(broke).feasible);

    options.supporter_fraction = 1.0;
    Instance everyone = generate_tournament(options, 10);
    everyone.budget = 0;
    const SolveOutcome zero = solve_transitive_tournament(everyone);
    CHECK(zero.feasible);
    CHECK(*zero.cost == 0);
}

TEST_CASE("tournament: only the first non-supporter in hierarchy order is bribed") {
    // Hierarchy 0 -> 1 -> 2 -> 3 with voter 0 already convinced.
    InstanceBuilder builder;
    builder.rankings = rankings_from_flags({1, 0, 0, 0});
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) builder.arcs.push_back({i, j, Rational::one()});
    builder.budget = 1;
    Instance instance = builder.build();
    const SolveOutcome out = solve_transitive_tournament(instance);
    CHECK(out.feasible);
    CHECK(*out.witness == ShiftVector{0, 1, 0, 0});
    check_matches_oracle(instance, out);
}

TEST_CASE("tournament recognition rejects non-tournaments") {
    Instance sym = two_candidate_instance({0, 0}, {{0, 1}}, 1);
    CHECK_THROWS_AS(solve_transitive_tournament(sym), std::invalid_argument);

    // A directed 3-cycle has equal out-degrees.
    InstanceBuilder cyclic;
    cyclic.rankings = rankings_from_flags({0, 0, 0});
    cyclic.arcs = {{0, 1, Rational::one()}, {1, 2, Rational::one()}, {2, 0, Rational::one()}};
    cyclic.budget = 1;
    CHECK_THROWS_AS(solve_transitive_tournament(cyclic.build()), std::invalid_argument);
}

TEST_CASE("tournament solver matches the oracle on random instances") {
    Rng rng(3333);
    for (int round = 0; round < 40; ++round) {
        GeneratorOptions options;
        options.num_voters = rng.uniform(1, 8);
        options.supporter_fraction = 0.3;
        options.budget = rng.uniform(0, 3);
        Instance instance = generate_tournament(options, rng.next());
        const SolveOutcome out = solve_transitive_tournament(instance);
        CHECK((*out.cost == 0 || *out.cost == 1 || !out.feasible));
        check_matches_oracle(instance, out);
    }
}

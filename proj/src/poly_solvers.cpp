#include "sbsn/poly_solvers.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace sbsn {

namespace {

class Timer {
  public:
    std::int64_t micros() const {
        return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

int cheapest_linear_voter(const Instance& instance) {
    int best = 0;
    for (int i = 1; i < instance.num_voters(); ++i)
        if (instance.costs.per_voter[i].linear_coeff() < instance.costs.per_voter[best].linear_coeff()) best = i;
    return best;
}

// Applies a uniform effective shift to every voter and evaluates the win test.
bool wins_at_uniform_shift(const Instance& instance, int alpha) {
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

SolveOutcome realize_uniform_shift(const Instance& instance, int alpha, const char* algo, SolveStats stats) {
    ShiftVector witness(instance.num_voters(), 0);
    std::int64_t cost = 0;
    if (alpha > 0) {
        const int voter = cheapest_linear_voter(instance);
        witness[voter] = alpha;
        cost = instance.costs.per_voter[voter].linear_coeff() * alpha;
    }
    if (cost > instance.budget) {
        SolveOutcome out = SolveOutcome::infeasible_outcome(algo);
        out.stats = std::move(stats);
        return out;
    }
    SolveOutcome out = SolveOutcome::solved(algo, cost, std::move(witness));
    out.stats = std::move(stats);
    return out;
}

}  // namespace

std::vector<int> position_vector(const Instance& instance) {
    std::vector<int> p(instance.num_voters());
    for (int i = 0; i < instance.num_voters(); ++i) p[i] = instance.shifts_to_top(i) + 1;
    return p;
}

SolveOutcome solve_complete_majority(const Instance& instance) {
    instance.validate();
    Timer timer;
    require(instance.network.is_complete_unit(), "complete-majority: network is not complete with unit weights");
    require(instance.costs.all_linear(), "complete-majority: cost functions are not linear");
    require(instance.rule == Rule::Majority, "complete-majority: rule is not majority");

    const int n = instance.num_voters();
    int alpha = 0;
    const auto quota = instance.target_supporters();
    if (quota > 0) {
        // Smallest alpha with at least `quota` voters at rank-1 <= alpha: the
        // quota-th smallest entry of the rank-1 vector.
        std::vector<int> thresholds(n);
        for (int i = 0; i < n; ++i) thresholds[i] = instance.shifts_to_top(i);
        std::nth_element(thresholds.begin(), thresholds.begin() + (quota - 1), thresholds.end());
        alpha = thresholds[quota - 1];
    }

    SolveStats stats;
    stats.param = "alpha=" + std::to_string(alpha);
    stats.micros = timer.micros();
    return realize_uniform_shift(instance, alpha, "complete-majority", std::move(stats));
}

SolveOutcome solve_complete_plurality(const Instance& instance) {
    instance.validate();
    Timer timer;
    require(instance.network.is_complete_unit(), "complete-plurality: network is not complete with unit weights");
    require(instance.costs.all_linear(), "complete-plurality: cost functions are not linear");
    require(instance.rule == Rule::Plurality, "complete-plurality: rule is not plurality");

    // Candidate uniform shifts: 0 and every rank-1. The win predicate is
    // monotone in alpha and always true at the largest candidate value.
    std::vector<int> candidates{0};
    for (int i = 0; i < instance.num_voters(); ++i) candidates.push_back(instance.shifts_to_top(i));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::uint64_t probes = 0;
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        ++probes;
        if (wins_at_uniform_shift(instance, candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    const int alpha = candidates[lo];
    if (!wins_at_uniform_shift(instance, alpha))
        throw std::logic_error("complete-plurality: no winning uniform shift found");

    SolveStats stats;
    stats.states = probes;
    stats.param = "alpha=" + std::to_string(alpha);
    stats.micros = timer.micros();
    return realize_uniform_shift(instance, alpha, "complete-plurality", std::move(stats));
}

SolveOutcome solve_transitive_tournament(const Instance& instance) {
    instance.validate();
    Timer timer;
    const int n = instance.num_voters();
    require(instance.num_candidates == 2, "tournament: needs exactly two candidates");
    require(instance.rule == Rule::Majority, "tournament: rule is not majority");
    require(instance.network.all_weights_one(), "tournament: edge weights are not all one");
    for (int i = 0; i < n; ++i)
        require(instance.unit_cost(i) == 1, "tournament: bribery costs are not all one");

    // Recognize a transitive tournament: out-degrees must be a permutation of
    // 0..n-1 and every arc must respect the induced order.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return instance.network.out_neighbors(a).size() > instance.network.out_neighbors(b).size();
    });
    require(static_cast<std::int64_t>(instance.network.arcs().size()) ==
                static_cast<std::int64_t>(n) * (n - 1) / 2,
            "tournament: arc count does not match a tournament");
    for (int r = 0; r < n; ++r)
        require(static_cast<int>(instance.network.out_neighbors(order[r]).size()) == n - 1 - r,
                "tournament: out-degree sequence is not 0..n-1");
    for (int r = 0; r < n; ++r)
        for (int q = r + 1; q < n; ++q)
            require(instance.network.has_arc(order[r], order[q]), "tournament: arcs are not transitive");

    SolveStats stats;
    stats.micros = timer.micros();

    const std::int64_t target = instance.target_supporters();
    if (instance.initial_supporters() >= target) {
        SolveOutcome out = SolveOutcome::solved("tournament", 0, ShiftVector(n, 0));
        out.stats = std::move(stats);
        return out;
    }
    int chosen = -1;
    for (int r = 0; r < n; ++r)
        if (!instance.tops_preferred(order[r])) {
            chosen = order[r];
            break;
        }
    // Bribing `chosen` convinces it and all later vertices; earlier ones
    // already top the preferred candidate, so all n voters end up convinced.
    if (instance.budget < 1) {
        SolveOutcome out = SolveOutcome::infeasible_outcome("tournament");
        out.stats = std::move(stats);
        return out;
    }
    ShiftVector witness(n, 0);
    witness[chosen] = 1;
    SolveOutcome out = SolveOutcome::solved("tournament", 1, std::move(witness));
    out.stats = std::move(stats);
    return out;
}

}  // namespace sbsn

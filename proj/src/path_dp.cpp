#include "sbsn/path_dp.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

namespace sbsn {

namespace {

constexpr int kDead = std::numeric_limits<int>::min();

// Orders the voters along the influence chain: chain[0] receives no influence
// and influences nobody further; chain[n-1] is the source end. Arc direction
// is source -> target, so arcs run chain[i+1] -> chain[i].
std::vector<int> path_order(const InfluenceNetwork& network) {
    const int n = network.num_voters();
    if (static_cast<int>(network.arcs().size()) != n - 1)
        throw std::invalid_argument("path: arc count is not n-1");
    if (!network.all_weights_one()) throw std::invalid_argument("path: edge weights are not all one");
    std::vector<int> out_deg(n, 0), in_deg(n, 0);
    for (const Arc& a : network.arcs()) {
        ++out_deg[a.from];
        ++in_deg[a.to];
    }
    int head = -1;
    for (int v = 0; v < n; ++v) {
        if (out_deg[v] > 1 || in_deg[v] > 1) throw std::invalid_argument("path: vertex degree exceeds one");
        if (out_deg[v] == 0) {
            if (head != -1) throw std::invalid_argument("path: multiple chain ends");
            head = v;
        }
    }
    if (head == -1) throw std::invalid_argument("path: no chain end found");
    std::vector<int> chain{head};
    std::vector<int> influencer(n, -1);
    for (const Arc& a : network.arcs()) influencer[a.to] = a.from;
    while (influencer[chain.back()] != -1) chain.push_back(influencer[chain.back()]);
    if (static_cast<int>(chain.size()) != n) throw std::invalid_argument("path: network is not a single chain");
    return chain;
}

}  // namespace

SolveOutcome solve_path_dp(const Instance& instance) {
    instance.validate();
    const auto start = std::chrono::steady_clock::now();
    if (instance.rule != Rule::Majority) throw std::invalid_argument("path: rule is not majority");
    if (!instance.costs.all_linear()) throw std::invalid_argument("path: cost functions are not linear");
    const std::vector<int> chain = path_order(instance.network);

    const int n = instance.num_voters();
    const int shifts = instance.num_candidates;  // direct shifts range over 0..m-1
    std::vector<int> tau(n), coeff(n);
    for (int i = 0; i < n; ++i) {
        tau[i] = instance.shifts_to_top(chain[i]);
        coeff[i] = static_cast<int>(instance.costs.per_voter[chain[i]].linear_coeff());
    }

    std::int64_t max_spend = 0;
    for (int i = 0; i < n; ++i) max_spend += static_cast<std::int64_t>(coeff[i]) * (shifts - 1);
    const std::int64_t budget = std::min(instance.budget, max_spend);
    const auto width = static_cast<std::size_t>(budget) + 1;

    // dp[i][s][d]: most convinced voters among chain positions i..n-1 when
    // position i gets direct shift s and those positions spend at most d.
    // Position i is convinced when s_i + s_{i+1} reaches its rank-1.
    auto idx = [&](int s, std::int64_t d) { return static_cast<std::size_t>(s) * width + static_cast<std::size_t>(d); };
    std::vector<std::vector<int>> dp(n, std::vector<int>(static_cast<std::size_t>(shifts) * width, kDead));
    for (int s = 0; s < shifts; ++s) {
        const std::int64_t c = static_cast<std::int64_t>(coeff[n - 1]) * s;
        for (std::int64_t d = c; d <= budget; ++d) dp[n - 1][idx(s, d)] = s >= tau[n - 1] ? 1 : 0;
    }
    for (int i = n - 2; i >= 0; --i) {
        for (int s = 0; s < shifts; ++s) {
            const std::int64_t c = static_cast<std::int64_t>(coeff[i]) * s;
            for (std::int64_t d = c; d <= budget; ++d) {
                int best = kDead;
                for (int next = 0; next < shifts; ++next) {
                    const int sub = dp[i + 1][idx(next, d - c)];
                    if (sub == kDead) continue;
                    const int value = sub + (s + next >= tau[i] ? 1 : 0);
                    if (value > best) best = value;
                }
                dp[i][idx(s, d)] = best;
            }
        }
    }

    auto best_at = [&](std::int64_t d) {
        int best = kDead;
        for (int s = 0; s < shifts; ++s) best = std::max(best, dp[0][idx(s, d)]);
        return best;
    };

    const std::int64_t target = instance.target_supporters();
    SolveStats stats;
    stats.states = static_cast<std::uint64_t>(n) * shifts * width;
    stats.param = "b=" + std::to_string(budget);
    auto finish = [&](SolveOutcome out) {
        out.stats = std::move(stats);
        out.stats.micros =
            std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
        return out;
    };

    std::int64_t best_cost = -1;
    for (std::int64_t d = 0; d <= budget; ++d)
        if (best_at(d) >= target) {
            best_cost = d;
            break;
        }
    if (best_cost < 0) return finish(SolveOutcome::infeasible_outcome("path"));

    // Re-derive the decisions front to back, smallest shift first at ties.
    ShiftVector witness(n, 0);
    const int total = best_at(best_cost);
    int cur_shift = -1;
    int want = total;
    std::int64_t left = best_cost;
    for (int s = 0; s < shifts; ++s)
        if (dp[0][idx(s, left)] == total) {
            cur_shift = s;
            break;
        }
    if (cur_shift < 0) throw std::logic_error("path: reconstruction failed at the chain head");
    witness[chain[0]] = cur_shift;
    for (int i = 0; i + 1 < n; ++i) {
        left -= static_cast<std::int64_t>(coeff[i]) * cur_shift;
        int next_shift = -1;
        for (int s = 0; s < shifts; ++s) {
            const int sub = dp[i + 1][idx(s, left)];
            if (sub == kDead) continue;
            if (sub + (cur_shift + s >= tau[i] ? 1 : 0) == want) {
                next_shift = s;
                want = sub;
                break;
            }
        }
        if (next_shift < 0) throw std::logic_error("path: reconstruction failed mid-chain");
        witness[chain[i + 1]] = next_shift;
        cur_shift = next_shift;
    }
    return finish(SolveOutcome::solved("path", best_cost, std::move(witness)));
}

}  // namespace sbsn

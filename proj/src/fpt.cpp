#include "sbsn/fpt.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "sbsn/cluster.hpp"
#include "sbsn/tree_decomposition.hpp"
#include "sbsn/treewidth_dp.hpp"

namespace sbsn {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

class Timer {
  public:
    std::int64_t micros() const {
        return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::optional<std::vector<int>> cycle_in_alive(const UndirectedGraph& graph, const std::vector<char>& alive) {
    std::vector<int> keep;
    for (int v = 0; v < graph.num_vertices(); ++v)
        if (!alive[v]) keep.push_back(v);
    std::vector<int> old_of_new;
    const UndirectedGraph sub = graph.remove_vertices(keep, &old_of_new);
    auto cycle = sub.find_cycle();
    if (!cycle) return std::nullopt;
    for (int& v : *cycle) v = old_of_new[v];
    return cycle;
}

std::optional<std::array<int, 3>> p3_in_alive(const UndirectedGraph& graph, const std::vector<char>& alive) {
    std::vector<int> keep;
    for (int v = 0; v < graph.num_vertices(); ++v)
        if (!alive[v]) keep.push_back(v);
    std::vector<int> old_of_new;
    const UndirectedGraph sub = graph.remove_vertices(keep, &old_of_new);
    auto p3 = sub.find_induced_p3();
    if (!p3) return std::nullopt;
    for (int& v : *p3) v = old_of_new[v];
    return p3;
}

bool deletion_search(const UndirectedGraph& graph, DeletionKind kind, std::vector<char>& alive, int k,
                     std::vector<int>& chosen) {
    std::vector<int> branch;
    if (kind == DeletionKind::FeedbackVertexSet) {
        auto cycle = cycle_in_alive(graph, alive);
        if (!cycle) return true;
        branch = *cycle;
    } else {
        auto p3 = p3_in_alive(graph, alive);
        if (!p3) return true;
        branch.assign(p3->begin(), p3->end());
    }
    if (k == 0) return false;
    for (int v : branch) {
        alive[v] = 0;
        chosen.push_back(v);
        if (deletion_search(graph, kind, alive, k - 1, chosen)) return true;
        chosen.pop_back();
        alive[v] = 1;
    }
    return false;
}

}  // namespace

DeletionSet find_deletion_set(const UndirectedGraph& graph, DeletionKind kind) {
    for (int k = 0; k <= graph.num_vertices(); ++k) {
        std::vector<char> alive(graph.num_vertices(), 1);
        std::vector<int> chosen;
        if (deletion_search(graph, kind, alive, k, chosen)) {
            std::sort(chosen.begin(), chosen.end());
            return DeletionSet{kind, chosen};
        }
    }
    throw std::logic_error("deletion set search failed");  // k = n always succeeds
}

namespace {

// Decomposition of `graph` built from the forest left after deleting `core`,
// with every core vertex added to every bag. Width <= 1 + |core|.
TreeDecomposition decomposition_with_core(const UndirectedGraph& graph, const std::vector<int>& core) {
    std::vector<int> old_of_new;
    const UndirectedGraph forest = graph.remove_vertices(core, &old_of_new);
    TreeDecomposition dec = build_tree_decomposition(forest);
    for (auto& node : dec.nodes) {
        for (int& v : node.bag) v = old_of_new[v];
        node.bag.insert(node.bag.end(), core.begin(), core.end());
        std::sort(node.bag.begin(), node.bag.end());
    }
    return dec;
}

struct Brancher {
    const Instance& instance;
    std::vector<int> deletion;  // sorted

    std::int64_t target() const { return instance.target_supporters(); }

    // Supporters fixed by bribing Y: initial ones plus Y and its neighbors.
    std::vector<char> base_supporters(const std::vector<int>& bribed, const UndirectedGraph& support) const {
        std::vector<char> base(instance.num_voters(), 0);
        for (int v = 0; v < instance.num_voters(); ++v)
            if (instance.tops_preferred(v)) base[v] = 1;
        for (int v : bribed) {
            base[v] = 1;
            for (int u : support.neighbors(v)) base[u] = 1;
        }
        return base;
    }
};

}  // namespace

SolveOutcome solve_via_fvs(const Instance& instance) {
    instance.validate();
    Timer timer;
    if (instance.num_candidates != 2) throw std::invalid_argument("fvs: needs exactly two candidates");
    if (instance.rule != Rule::Majority) throw std::invalid_argument("fvs: rule is not majority");
    if (!instance.network.is_symmetric_unit())
        throw std::invalid_argument("fvs: network is not symmetric with unit weights");
    for (int i = 0; i < instance.num_voters(); ++i)
        if (instance.unit_cost(i) != 1) throw std::invalid_argument("fvs: bribery costs are not all one");

    const UndirectedGraph support = instance.network.undirected_support();
    const Brancher brancher{instance, find_deletion_set(support, DeletionKind::FeedbackVertexSet).vertices};
    const auto& deletion = brancher.deletion;
    const int k = static_cast<int>(deletion.size());

    SolveOutcome best = SolveOutcome::infeasible_outcome("fvs");
    std::uint64_t branches = 0;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        ++branches;
        std::vector<int> bribed;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) bribed.push_back(deletion[i]);
        const auto fixed_cost = static_cast<std::int64_t>(bribed.size());
        if (fixed_cost > instance.budget) continue;
        if (best.feasible && fixed_cost >= *best.cost) continue;

        const std::vector<char> base = brancher.base_supporters(bribed, support);
        const std::int64_t residual_target = brancher.target() - static_cast<std::int64_t>(bribed.size());

        // Residual instance: everything but Y, with the fixed supporters baked
        // into the profile and the threshold reduced by the bribed voters.
        std::vector<char> is_bribed(instance.num_voters(), 0);
        for (int v : bribed) is_bribed[v] = 1;
        std::vector<int> old_of_new;
        const UndirectedGraph res_graph = support.remove_vertices(bribed, &old_of_new);
        const int res_n = res_graph.num_vertices();
        if (res_n == 0) {
            if (residual_target <= 0) {
                ShiftVector witness(instance.num_voters(), 0);
                for (int v : bribed) witness[v] = 1;
                if (!verify(instance, witness)) throw std::logic_error("fvs: combined witness failed verification");
                best = SolveOutcome::solved("fvs", fixed_cost, std::move(witness));
            }
            continue;
        }
        if (residual_target > res_n) continue;

        Instance residual;
        residual.num_candidates = 2;
        residual.preferred = instance.preferred == 0 ? 0 : 1;
        residual.rule = Rule::Majority;
        residual.tiebreak = {0, 1};
        residual.budget = instance.budget - fixed_cost;
        residual.supporter_threshold = std::max<std::int64_t>(residual_target, 0);
        residual.profile.rankings.resize(res_n);
        residual.costs.per_voter.assign(res_n, VoterCost{});
        const int other = residual.preferred == 0 ? 1 : 0;
        for (int i = 0; i < res_n; ++i)
            residual.profile.rankings[i] = base[old_of_new[i]]
                                               ? std::vector<int>{residual.preferred, other}
                                               : std::vector<int>{other, residual.preferred};
        std::vector<Arc> arcs;
        for (auto [u, v] : res_graph.edges()) {
            arcs.push_back({u, v, Rational::one()});
            arcs.push_back({v, u, Rational::one()});
        }
        residual.network = InfluenceNetwork(res_n, std::move(arcs));

        std::vector<int> surviving_core;
        for (int v : deletion)
            if (!is_bribed[v]) surviving_core.push_back(v);
        std::vector<int> core_res;
        for (int i = 0; i < res_n; ++i)
            if (std::binary_search(surviving_core.begin(), surviving_core.end(), old_of_new[i]))
                core_res.push_back(i);
        const TreeDecomposition dec = decomposition_with_core(res_graph, core_res);

        const SolveOutcome sub = solve_treewidth_dp(residual, make_nice(dec));
        if (!sub.feasible) continue;
        const std::int64_t total = fixed_cost + *sub.cost;
        if (best.feasible && total >= *best.cost) continue;
        ShiftVector witness(instance.num_voters(), 0);
        for (int v : bribed) witness[v] = 1;
        for (int i = 0; i < res_n; ++i)
            if ((*sub.witness)[i]) witness[old_of_new[i]] = 1;
        if (!verify(instance, witness)) throw std::logic_error("fvs: combined witness failed verification");
        best = SolveOutcome::solved("fvs", total, std::move(witness));
    }
    best.algorithm = "fvs";
    best.stats.states = branches;
    best.stats.param = "k=" + std::to_string(k);
    best.stats.micros = timer.micros();
    return best;
}

namespace {

// Minimum-cost options for bribing a non-empty member subset of one clique,
// keyed by the union of covered deletion vertices.
struct CliqueOptions {
    std::vector<int> members;                 // residual voter ids
    std::vector<std::uint32_t> cover;         // per member, mask over the uncovered deletion vertices
    std::vector<std::int64_t> unit;           // per member bribe cost
    int gain = 0;                             // members outside the fixed supporter base
    std::vector<std::int64_t> best;           // best[mask]: min cost with >= 1 bribe, coverage == mask union

    void build(int mask_count) {
        best.assign(mask_count, kInf);
        // Subset DP over members; states split by whether anyone is bribed yet.
        std::vector<std::int64_t> none(mask_count, kInf), some(mask_count, kInf);
        none[0] = 0;
        for (std::size_t j = 0; j < members.size(); ++j) {
            auto next_none = none;
            auto next_some = some;
            for (int m = 0; m < mask_count; ++m) {
                if (none[m] < kInf) {
                    auto& slot = next_some[m | cover[j]];
                    slot = std::min(slot, none[m] + unit[j]);
                }
                if (some[m] < kInf) {
                    auto& slot = next_some[m | cover[j]];
                    slot = std::min(slot, some[m] + unit[j]);
                }
            }
            none = std::move(next_none);
            some = std::move(next_some);
        }
        best = std::move(some);
    }

    // One cheapest member subset achieving coverage `mask`; empty on failure.
    std::vector<int> subset_for(std::uint32_t mask, std::int64_t cost) const {
        const std::size_t count = members.size();
        std::vector<std::vector<std::int64_t>> none(count + 1), some(count + 1);
        const int mask_count = static_cast<int>(best.size());
        for (std::size_t j = 0; j <= count; ++j) {
            none[j].assign(mask_count, kInf);
            some[j].assign(mask_count, kInf);
        }
        none[0][0] = 0;
        for (std::size_t j = 0; j < count; ++j)
            for (int m = 0; m < mask_count; ++m) {
                if (none[j][m] < kInf) {
                    none[j + 1][m] = std::min(none[j + 1][m], none[j][m]);
                    auto& slot = some[j + 1][m | cover[j]];
                    slot = std::min(slot, none[j][m] + unit[j]);
                }
                if (some[j][m] < kInf) {
                    some[j + 1][m] = std::min(some[j + 1][m], some[j][m]);
                    auto& slot = some[j + 1][m | cover[j]];
                    slot = std::min(slot, some[j][m] + unit[j]);
                }
            }
        // Walk back preferring "skip".
        std::vector<int> out;
        std::uint32_t m = mask;
        bool any = true;
        std::int64_t c = cost;
        for (std::size_t j = count; j > 0; --j) {
            if (!any) {
                if (none[j - 1][m] == c) continue;
            } else if (some[j - 1][m] == c) {
                continue;
            }
            // Member j-1 was bribed: find a predecessor state.
            bool found = false;
            for (std::uint32_t prev = 0; prev < static_cast<std::uint32_t>(mask_count) && !found; ++prev) {
                if ((prev | cover[j - 1]) != m) continue;
                if (none[j - 1][prev] < kInf && none[j - 1][prev] + unit[j - 1] == c) {
                    out.push_back(members[j - 1]);
                    m = prev;
                    any = false;
                    c -= unit[j - 1];
                    found = true;
                } else if (some[j - 1][prev] < kInf && some[j - 1][prev] + unit[j - 1] == c) {
                    out.push_back(members[j - 1]);
                    m = prev;
                    c -= unit[j - 1];
                    found = true;
                }
            }
            if (!found) return {};
        }
        return out;
    }
};

}  // namespace

SolveOutcome solve_via_cvd(const Instance& instance) {
    instance.validate();
    Timer timer;
    if (instance.num_candidates != 2) throw std::invalid_argument("cvd: needs exactly two candidates");
    if (instance.rule != Rule::Majority) throw std::invalid_argument("cvd: rule is not majority");
    if (!instance.network.is_symmetric_unit())
        throw std::invalid_argument("cvd: network is not symmetric with unit weights");

    const UndirectedGraph support = instance.network.undirected_support();
    const Brancher brancher{instance, find_deletion_set(support, DeletionKind::ClusterVertexDeletion).vertices};
    const auto& deletion = brancher.deletion;
    const int k = static_cast<int>(deletion.size());
    std::vector<char> in_deletion(instance.num_voters(), 0);
    for (int v : deletion) in_deletion[v] = 1;

    std::vector<int> old_of_new;
    const UndirectedGraph cluster_graph = support.remove_vertices(deletion, &old_of_new);
    const auto cliques = cluster_graph.components();

    SolveOutcome best = SolveOutcome::infeasible_outcome("cvd");
    std::uint64_t branches = 0;
    const std::int64_t target = brancher.target();

    for (std::uint32_t ymask = 0; ymask < (1u << k); ++ymask) {
        ++branches;
        std::vector<int> bribed;
        std::int64_t fixed_cost = 0;
        for (int i = 0; i < k; ++i)
            if (ymask & (1u << i)) {
                bribed.push_back(deletion[i]);
                fixed_cost += instance.unit_cost(deletion[i]);
            }
        if (fixed_cost > instance.budget) continue;
        if (best.feasible && fixed_cost >= *best.cost) continue;

        const std::vector<char> base = brancher.base_supporters(bribed, support);
        std::int64_t base_count = 0;
        for (char b : base) base_count += b;

        // Deletion vertices still convincible only through clique bribes.
        std::vector<int> uncovered;
        for (int v : deletion)
            if (!base[v]) uncovered.push_back(v);
        const int u = static_cast<int>(uncovered.size());
        const int mask_count = 1 << u;
        auto cover_of = [&](int voter) {
            std::uint32_t mask = 0;
            for (int i = 0; i < u; ++i)
                if (support.has_edge(voter, uncovered[i])) mask |= 1u << i;
            return mask;
        };

        std::vector<CliqueOptions> options(cliques.size());
        int gain_total = 0;
        for (std::size_t i = 0; i < cliques.size(); ++i) {
            auto& opt = options[i];
            for (int nv : cliques[i]) {
                const int voter = old_of_new[nv];
                opt.members.push_back(voter);
                opt.cover.push_back(cover_of(voter));
                opt.unit.push_back(instance.unit_cost(voter));
                if (!base[voter]) ++opt.gain;
            }
            opt.build(mask_count);
            gain_total += opt.gain;
        }

        // DP over cliques: cost to reach (coverage mask, clique gain).
        const int gain_cap = gain_total;
        auto cell = [&](int mask, int g) { return static_cast<std::size_t>(mask) * (gain_cap + 1) + g; };
        std::vector<std::vector<std::int64_t>> table(cliques.size() + 1,
                                                     std::vector<std::int64_t>(mask_count * (gain_cap + 1), kInf));
        table[0][cell(0, 0)] = 0;
        for (std::size_t i = 0; i < cliques.size(); ++i) {
            const auto& opt = options[i];
            auto& prev = table[i];
            auto& next = table[i + 1];
            next = prev;  // skip the clique
            for (int m = 0; m < mask_count; ++m)
                for (int g = 0; g + opt.gain <= gain_cap; ++g) {
                    const std::int64_t c = prev[cell(m, g)];
                    if (c >= kInf) continue;
                    for (int cm = 0; cm < mask_count; ++cm) {
                        if (opt.best[cm] >= kInf) continue;
                        auto& slot = next[cell(m | cm, g + opt.gain)];
                        slot = std::min(slot, c + opt.best[cm]);
                    }
                }
        }

        // Cheapest residual configuration meeting the supporter target.
        std::int64_t best_res = kInf;
        int best_mask = -1, best_gain = -1;
        for (int m = 0; m < mask_count; ++m)
            for (int g = 0; g <= gain_cap; ++g) {
                if (base_count + g + std::popcount(static_cast<std::uint32_t>(m)) < target) continue;
                const std::int64_t c = table[cliques.size()][cell(m, g)];
                if (c < best_res) {
                    best_res = c;
                    best_mask = m;
                    best_gain = g;
                }
            }
        if (best_res >= kInf || fixed_cost + best_res > instance.budget) continue;
        const std::int64_t total = fixed_cost + best_res;
        if (best.feasible && total >= *best.cost) continue;

        // Reconstruct clique choices.
        ShiftVector witness(instance.num_voters(), 0);
        for (int v : bribed) witness[v] = 1;
        int m = best_mask, g = best_gain;
        std::int64_t c = best_res;
        for (std::size_t i = cliques.size(); i > 0; --i) {
            const auto& opt = options[i - 1];
            if (table[i - 1][cell(m, g)] == c) continue;  // clique skipped
            bool found = false;
            for (int pm = 0; pm < mask_count && !found; ++pm) {
                for (int cm = 0; cm < mask_count && !found; ++cm) {
                    if ((pm | cm) != m || opt.best[cm] >= kInf) continue;
                    if (g < opt.gain) continue;
                    const std::int64_t pc = table[i - 1][cell(pm, g - opt.gain)];
                    if (pc >= kInf || pc + opt.best[cm] != c) continue;
                    for (int voter : opt.subset_for(cm, opt.best[cm])) witness[voter] = 1;
                    m = pm;
                    g -= opt.gain;
                    c = pc;
                    found = true;
                }
            }
            if (!found) throw std::logic_error("cvd: clique reconstruction failed");
        }
        if (!verify(instance, witness)) throw std::logic_error("cvd: combined witness failed verification");
        best = SolveOutcome::solved("cvd", total, std::move(witness));
    }
    best.algorithm = "cvd";
    best.stats.states = branches;
    best.stats.param = "k=" + std::to_string(k);
    best.stats.micros = timer.micros();
    return best;
}

SolveOutcome solve_via_partial_domination(const Instance& instance, std::optional<int> k_max) {
    instance.validate();
    Timer timer;
    if (instance.num_candidates != 2) throw std::invalid_argument("partial-dom: needs exactly two candidates");
    if (instance.rule != Rule::Majority) throw std::invalid_argument("partial-dom: rule is not majority");
    if (!instance.network.is_symmetric_unit())
        throw std::invalid_argument("partial-dom: network is not symmetric with unit weights");
    for (int i = 0; i < instance.num_voters(); ++i)
        if (instance.unit_cost(i) != 1) throw std::invalid_argument("partial-dom: bribery costs are not all one");

    const int n = instance.num_voters();
    const UndirectedGraph support = instance.network.undirected_support();
    const std::int64_t missing = std::max<std::int64_t>(0, instance.target_supporters() - instance.initial_supporters());

    SolveStats stats;
    auto finish = [&](SolveOutcome out) {
        out.stats = std::move(stats);
        out.stats.micros = timer.micros();
        return out;
    };

    if (missing == 0) return finish(SolveOutcome::solved("partial-dom", 0, ShiftVector(n, 0)));

    // Static gains: newly covered non-supporters per closed neighborhood.
    std::vector<int> order(n), gain(n, 0);
    for (int v = 0; v < n; ++v) {
        if (!instance.tops_preferred(v)) ++gain[v];
        for (int nb : support.neighbors(v))
            if (!instance.tops_preferred(nb)) ++gain[v];
    }
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return gain[a] > gain[b]; });

    const int limit = static_cast<int>(std::min<std::int64_t>(
        {static_cast<std::int64_t>(k_max.value_or(n)), instance.budget, static_cast<std::int64_t>(n)}));

    std::vector<char> covered(n, 0);
    std::vector<int> chosen;
    std::uint64_t visited = 0;

    // Depth-first over positions in the static order; bound with the largest
    // static gains remaining (static gain never underestimates the residual).
    auto search = [&](auto&& self, int pos, int picks_left, int still_missing) -> bool {
        ++visited;
        if (still_missing <= 0) return true;
        if (picks_left == 0) return false;
        int optimistic = 0;
        for (int i = pos; i < n && optimistic < still_missing; ++i) {
            const int left_here = picks_left - 0;
            if (i - pos >= left_here) break;
            optimistic += gain[order[i]];
        }
        if (optimistic < still_missing) return false;
        for (int i = pos; i < n; ++i) {
            const int v = order[i];
            int fresh = 0;
            std::vector<int> flipped;
            auto mark = [&](int u) {
                if (covered[u]) return;
                covered[u] = 1;
                flipped.push_back(u);
                if (!instance.tops_preferred(u)) ++fresh;
            };
            mark(v);
            for (int nb : support.neighbors(v)) mark(nb);
            chosen.push_back(v);
            if (self(self, i + 1, picks_left - 1, still_missing - fresh)) return true;
            chosen.pop_back();
            for (int u : flipped) covered[u] = 0;
        }
        return false;
    };

    for (int size = 1; size <= limit; ++size) {
        covered.assign(n, 0);
        chosen.clear();
        if (search(search, 0, size, static_cast<int>(missing))) {
            ShiftVector witness(n, 0);
            for (int v : chosen) witness[v] = 1;
            stats.nodes = visited;
            stats.param = "k=" + std::to_string(size);
            return finish(SolveOutcome::solved("partial-dom", static_cast<std::int64_t>(chosen.size()), std::move(witness)));
        }
    }
    stats.nodes = visited;
    stats.param = "k>" + std::to_string(limit);
    return finish(SolveOutcome::infeasible_outcome("partial-dom"));
}

}  // namespace sbsn

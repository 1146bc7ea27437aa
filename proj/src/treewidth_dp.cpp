#include "sbsn/treewidth_dp.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace sbsn {

namespace {

// State key: bribed mask | activated mask << 16 | provisional mask << 32 |
// exact bribe count << 48. Bags are limited to 16 vertices.
using Key = std::uint64_t;

constexpr int kMaxBag = 16;

Key make_key(std::uint32_t bribed, std::uint32_t activated, std::uint32_t provisional, std::uint32_t spent) {
    return Key(bribed) | (Key(activated) << 16) | (Key(provisional) << 32) | (Key(spent) << 48);
}

std::uint32_t key_bribed(Key k) { return k & 0xffff; }
std::uint32_t key_activated(Key k) { return (k >> 16) & 0xffff; }
std::uint32_t key_provisional(Key k) { return (k >> 32) & 0xffff; }
std::uint32_t key_spent(Key k) { return (k >> 48) & 0xffff; }

enum class Op : std::uint8_t { Leaf, Bribe, Certified, Provisional, Untouched, Forget, Join };

struct Entry {
    int value = -1;
    Op op = Op::Leaf;
    Key back0 = 0;
    Key back1 = 0;
};

using StateMap = std::unordered_map<Key, Entry>;

// Inserts a bit gap at position `pos` (child mask -> parent mask).
std::uint32_t widen(std::uint32_t mask, int pos) {
    const std::uint32_t low = (1u << pos) - 1;
    return (mask & low) | ((mask & ~low) << 1);
}

// Removes the bit at position `pos` (child mask -> parent mask at a forget).
std::uint32_t shrink(std::uint32_t mask, int pos) {
    const std::uint32_t low = (1u << pos) - 1;
    return (mask & low) | ((mask >> 1) & ~low);
}

struct Dp {
    const Instance& instance;
    const NiceTreeDecomposition& dec;
    std::uint32_t clamp;  // budget axis bound
    std::vector<StateMap> maps;
    std::vector<std::uint32_t> nonsupporter_mask;  // per node, over bag positions

    void relax(StateMap& map, Key key, int value, Op op, Key back0, Key back1 = 0) {
        auto [it, inserted] = map.try_emplace(key, Entry{value, op, back0, back1});
        if (!inserted && value > it->second.value) it->second = Entry{value, op, back0, back1};
    }

    std::uint32_t bag_neighbors_of(int vertex, const std::vector<int>& bag) const {
        std::uint32_t mask = 0;
        for (std::size_t p = 0; p < bag.size(); ++p)
            if (bag[p] != vertex && instance.network.has_arc(vertex, bag[p])) mask |= 1u << p;
        return mask;
    }

    void process(int t) {
        const NiceNode& node = dec.nodes[t];
        StateMap& out = maps[t];
        std::uint32_t ns_mask = 0;
        for (std::size_t p = 0; p < node.bag.size(); ++p)
            if (!instance.tops_preferred(node.bag[p])) ns_mask |= 1u << p;
        nonsupporter_mask[t] = ns_mask;

        switch (node.kind) {
            case NiceKind::Leaf:
                relax(out, make_key(0, 0, 0, 0), 0, Op::Leaf, 0);
                return;
            case NiceKind::Introduce: {
                const auto& bag = node.bag;
                const int pos = static_cast<int>(std::lower_bound(bag.begin(), bag.end(), node.vertex) - bag.begin());
                const std::uint32_t self = 1u << pos;
                const std::uint32_t nbr = bag_neighbors_of(node.vertex, bag);
                const int self_gain = (ns_mask & self) ? 1 : 0;
                for (const auto& [child_key, child] : maps[node.child0]) {
                    const std::uint32_t bribed = widen(key_bribed(child_key), pos);
                    const std::uint32_t activated = widen(key_activated(child_key), pos);
                    const std::uint32_t provisional = widen(key_provisional(child_key), pos);
                    const std::uint32_t spent = key_spent(child_key);
                    // Bribing the new vertex activates it and certifies every
                    // bag neighbor, newly activating those outside I.
                    if (spent + 1 <= clamp) {
                        const int forced_gain = std::popcount(nbr & ~activated & ns_mask);
                        relax(out,
                              make_key(bribed | self, activated | self | nbr, provisional & ~nbr, spent + 1),
                              child.value + self_gain + forced_gain, Op::Bribe, child_key);
                    }
                    if (bribed & nbr) {
                        // A bribed bag neighbor exists: the vertex is activated now.
                        relax(out, make_key(bribed, activated | self, provisional, spent),
                              child.value + self_gain, Op::Certified, child_key);
                    } else {
                        // Activation promised to a later-introduced neighbor.
                        relax(out, make_key(bribed, activated | self, provisional | self, spent),
                              child.value + self_gain, Op::Provisional, child_key);
                        relax(out, make_key(bribed, activated, provisional, spent), child.value, Op::Untouched,
                              child_key);
                    }
                }
                return;
            }
            case NiceKind::Forget: {
                const auto& child_bag = dec.nodes[node.child0].bag;
                const int pos =
                    static_cast<int>(std::lower_bound(child_bag.begin(), child_bag.end(), node.vertex) - child_bag.begin());
                const std::uint32_t self = 1u << pos;
                for (const auto& [child_key, child] : maps[node.child0]) {
                    // A vertex may not leave every bag while its activation is
                    // still unbacked by a bribed neighbor.
                    if (key_provisional(child_key) & self) continue;
                    relax(out,
                          make_key(shrink(key_bribed(child_key), pos), shrink(key_activated(child_key), pos),
                                   shrink(key_provisional(child_key), pos), key_spent(child_key)),
                          child.value, Op::Forget, child_key);
                }
                return;
            }
            case NiceKind::Join: {
                // Group the right child's states by (bribed, activated);
                // partners must agree on both, promises certify across.
                std::unordered_map<std::uint64_t, std::vector<Key>> groups;
                for (const auto& [k, e] : maps[node.child1])
                    groups[key_bribed(k) | (std::uint64_t(key_activated(k)) << 16)].push_back(k);
                for (const auto& [left_key, left] : maps[node.child0]) {
                    const std::uint32_t bribed = key_bribed(left_key);
                    const std::uint32_t activated = key_activated(left_key);
                    const auto it = groups.find(bribed | (std::uint64_t(activated) << 16));
                    if (it == groups.end()) continue;
                    const int overlap = std::popcount(activated & ns_mask);
                    const auto bribes = static_cast<std::uint32_t>(std::popcount(bribed));
                    for (Key right_key : it->second) {
                        const std::uint32_t spent = key_spent(left_key) + key_spent(right_key) - bribes;
                        if (spent > clamp) continue;
                        const Entry& right = maps[node.child1].at(right_key);
                        relax(out,
                              make_key(bribed, activated, key_provisional(left_key) & key_provisional(right_key),
                                       spent),
                              tw_join_value(left.value, right.value, overlap), Op::Join, left_key, right_key);
                    }
                }
                return;
            }
        }
    }

    void reconstruct(int t, Key key, ShiftVector& witness) const {
        const NiceNode& node = dec.nodes[t];
        const Entry& entry = maps[t].at(key);
        switch (node.kind) {
            case NiceKind::Leaf: return;
            case NiceKind::Introduce:
                if (entry.op == Op::Bribe) witness[node.vertex] = 1;
                reconstruct(node.child0, entry.back0, witness);
                return;
            case NiceKind::Forget:
                reconstruct(node.child0, entry.back0, witness);
                return;
            case NiceKind::Join:
                reconstruct(node.child0, entry.back0, witness);
                reconstruct(node.child1, entry.back1, witness);
                return;
        }
    }
};

std::vector<int> post_order(const NiceTreeDecomposition& dec) {
    std::vector<int> order;
    order.reserve(dec.nodes.size());
    std::vector<std::pair<int, bool>> stack{{dec.root, false}};
    while (!stack.empty()) {
        auto [t, expanded] = stack.back();
        stack.pop_back();
        if (expanded) {
            order.push_back(t);
            continue;
        }
        stack.emplace_back(t, true);
        if (dec.nodes[t].child0 >= 0) stack.emplace_back(dec.nodes[t].child0, false);
        if (dec.nodes[t].child1 >= 0) stack.emplace_back(dec.nodes[t].child1, false);
    }
    return order;
}

}  // namespace

SolveOutcome solve_treewidth_dp(const Instance& instance, const NiceTreeDecomposition& dec) {
    instance.validate();
    const auto start = std::chrono::steady_clock::now();
    if (instance.num_candidates != 2) throw std::invalid_argument("treewidth: needs exactly two candidates");
    if (instance.rule != Rule::Majority) throw std::invalid_argument("treewidth: rule is not majority");
    if (!instance.network.is_symmetric_unit())
        throw std::invalid_argument("treewidth: network is not symmetric with unit weights");
    for (int i = 0; i < instance.num_voters(); ++i)
        if (instance.unit_cost(i) != 1) throw std::invalid_argument("treewidth: bribery costs are not all one");
    const UndirectedGraph support = instance.network.undirected_support();
    dec.validate(support);
    if (dec.width() + 1 > kMaxBag) throw std::invalid_argument("treewidth: bag size above the supported limit of 16");

    const std::int64_t target = instance.target_supporters();
    const int supporters = instance.initial_supporters();
    const std::int64_t deficit = std::max<std::int64_t>(0, target - supporters);
    const std::int64_t clamp = std::min(instance.budget, deficit);

    SolveStats stats;
    stats.nodes = dec.nodes.size();
    stats.param = "w=" + std::to_string(dec.width()) + " kappa=" + std::to_string(deficit);
    auto finish = [&](SolveOutcome out) {
        out.stats = std::move(stats);
        out.stats.micros =
            std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
        return out;
    };

    if (deficit == 0) return finish(SolveOutcome::solved("treewidth", 0, ShiftVector(instance.num_voters(), 0)));

    Dp dp{instance, dec, static_cast<std::uint32_t>(clamp), {}, {}};
    dp.maps.resize(dec.nodes.size());
    dp.nonsupporter_mask.resize(dec.nodes.size());
    for (int t : post_order(dec)) dp.process(t);
    for (const auto& map : dp.maps) stats.states += map.size();

    const StateMap& root = dp.maps[dec.root];
    for (std::uint32_t spent = 0; spent <= clamp; ++spent) {
        const auto it = root.find(make_key(0, 0, 0, spent));
        if (it == root.end()) continue;
        if (supporters + it->second.value < target) continue;
        ShiftVector witness(instance.num_voters(), 0);
        dp.reconstruct(dec.root, it->first, witness);
        if (shift_cost(instance, witness) != spent || !verify(instance, witness))
            throw std::logic_error("treewidth: reconstructed witness failed validation");
        return finish(SolveOutcome::solved("treewidth", spent, std::move(witness)));
    }
    return finish(SolveOutcome::infeasible_outcome("treewidth"));
}

SolveOutcome solve_treewidth(const Instance& instance) {
    const TreeDecomposition dec = build_tree_decomposition(instance.network.undirected_support());
    return solve_treewidth_dp(instance, make_nice(dec));
}

}  // namespace sbsn

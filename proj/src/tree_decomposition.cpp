#include "sbsn/tree_decomposition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace sbsn {

namespace {

std::string vertex_name(int v) { return "vertex " + std::to_string(v); }

}  // namespace

int TreeDecomposition::width() const {
    std::size_t largest = 0;
    for (const auto& node : nodes) largest = std::max(largest, node.bag.size());
    return static_cast<int>(largest) - 1;
}

int TreeDecomposition::find_root() const {
    std::vector<char> is_child(nodes.size(), 0);
    for (const auto& node : nodes)
        for (int c : node.children) {
            if (c < 0 || c >= static_cast<int>(nodes.size()) || is_child[c])
                throw std::invalid_argument("decomposition: malformed child links");
            is_child[c] = 1;
        }
    int root = -1;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (!is_child[i]) {
            if (root != -1) throw std::invalid_argument("decomposition: more than one root");
            root = static_cast<int>(i);
        }
    if (root == -1) throw std::invalid_argument("decomposition: no root (cycle in child links)");
    return root;
}

void TreeDecomposition::validate(const UndirectedGraph& graph) const {
    if (nodes.empty()) throw std::invalid_argument("decomposition: empty");
    const int root = find_root();
    {
        std::vector<char> reached(nodes.size(), 0);
        std::vector<int> stack{root};
        reached[root] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            const int t = stack.back();
            stack.pop_back();
            for (int c : nodes[t].children)
                if (!reached[c]) {
                    reached[c] = 1;
                    ++count;
                    stack.push_back(c);
                }
        }
        if (count != nodes.size()) throw std::invalid_argument("decomposition: nodes unreachable from the root");
    }

    const int n = graph.num_vertices();
    std::vector<std::vector<int>> holding(n);  // nodes containing each vertex
    for (std::size_t t = 0; t < nodes.size(); ++t) {
        const auto& bag = nodes[t].bag;
        if (!std::is_sorted(bag.begin(), bag.end()) || std::adjacent_find(bag.begin(), bag.end()) != bag.end())
            throw std::invalid_argument("decomposition: bag not sorted/unique at node " + std::to_string(t));
        for (int v : bag) {
            if (v < 0 || v >= n) throw std::invalid_argument("decomposition: bag vertex out of range");
            holding[v].push_back(static_cast<int>(t));
        }
    }
    for (int v = 0; v < n; ++v)
        if (holding[v].empty())
            throw std::invalid_argument("decomposition: " + vertex_name(v) + " appears in no bag");
    for (auto [u, v] : graph.edges()) {
        bool covered = false;
        for (int t : holding[u]) {
            const auto& bag = nodes[t].bag;
            if (std::binary_search(bag.begin(), bag.end(), v)) {
                covered = true;
                break;
            }
        }
        if (!covered)
            throw std::invalid_argument("decomposition: edge {" + std::to_string(u) + "," + std::to_string(v) +
                                        "} has no common bag");
    }
    // Connectivity: the nodes holding v must induce one subtree.
    for (int v = 0; v < n; ++v) {
        const auto& hold = holding[v];
        std::set<int> member(hold.begin(), hold.end());
        std::vector<int> stack{hold[0]};
        std::set<int> seen{hold[0]};
        while (!stack.empty()) {
            const int t = stack.back();
            stack.pop_back();
            for (int c : nodes[t].children)
                if (member.count(c) && !seen.count(c)) {
                    seen.insert(c);
                    stack.push_back(c);
                }
        }
        // Walk upward too: find parents inside the member set.
        bool grew = true;
        while (grew) {
            grew = false;
            for (int t : hold) {
                if (seen.count(t)) continue;
                for (int s : hold)
                    if (seen.count(s) &&
                        (std::find(nodes[s].children.begin(), nodes[s].children.end(), t) != nodes[s].children.end() ||
                         std::find(nodes[t].children.begin(), nodes[t].children.end(), s) != nodes[t].children.end())) {
                        seen.insert(t);
                        grew = true;
                        break;
                    }
            }
        }
        if (seen.size() != member.size())
            throw std::invalid_argument("decomposition: bags containing " + vertex_name(v) +
                                        " do not form a connected subtree");
    }
}

TreeDecomposition build_tree_decomposition(const UndirectedGraph& graph) {
    const int n = graph.num_vertices();
    TreeDecomposition dec;
    if (n == 0) {
        dec.nodes.push_back({});
        return dec;
    }

    // Greedy minimum fill-in elimination. On forests every pick has zero
    // fill-in and the result has width at most 1.
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : graph.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<char> eliminated(n, 0);
    std::vector<std::vector<int>> elim_bag(n);
    std::vector<int> elim_pos(n, -1);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long best_fill = -1;
        for (int v = 0; v < n; ++v) {
            if (eliminated[v]) continue;
            long fill = 0;
            for (auto it = adj[v].begin(); it != adj[v].end(); ++it)
                for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
                    if (!adj[*it].count(*jt)) ++fill;
            if (best == -1 || fill < best_fill) {
                best = v;
                best_fill = fill;
            }
        }
        elim_pos[best] = step;
        order.push_back(best);
        elim_bag[best].assign(adj[best].begin(), adj[best].end());
        for (int u : elim_bag[best])
            for (int w : elim_bag[best])
                if (u != w) adj[u].insert(w);
        for (int u : elim_bag[best]) adj[u].erase(best);
        adj[best].clear();
        eliminated[best] = 1;
    }

    // One node per vertex; the parent is the earliest-eliminated residual
    // neighbor. Vertices with no residual neighbors become component roots and
    // are chained under the final node to keep a single tree.
    dec.nodes.resize(n);
    std::vector<int> parent(n, -1);
    for (int v = 0; v < n; ++v) {
        auto& node = dec.nodes[elim_pos[v]];
        node.bag = elim_bag[v];
        node.bag.push_back(v);
        std::sort(node.bag.begin(), node.bag.end());
        if (!elim_bag[v].empty()) {
            int first = elim_bag[v][0];
            for (int u : elim_bag[v])
                if (elim_pos[u] < elim_pos[first]) first = u;
            parent[elim_pos[v]] = elim_pos[first];
        }
    }
    int previous_root = -1;
    for (int t = 0; t < n; ++t)
        if (parent[t] == -1) {
            if (previous_root != -1) parent[previous_root] = t;
            previous_root = t;
        }
    for (int t = 0; t < n; ++t)
        if (parent[t] != -1) dec.nodes[parent[t]].children.push_back(t);
    return dec;
}

namespace {

class Nicifier {
  public:
    explicit Nicifier(const TreeDecomposition& dec) : dec_(dec) {}

    NiceTreeDecomposition run() {
        const int root = dec_.find_root();
        int top = build(root);
        // Forget everything left so the root bag is empty.
        std::vector<int> bag = out_.nodes[top].bag;
        for (auto it = bag.rbegin(); it != bag.rend(); ++it) top = add_forget(top, *it);
        out_.root = top;
        return std::move(out_);
    }

  private:
    int add_node(NiceNode node) {
        out_.nodes.push_back(std::move(node));
        return static_cast<int>(out_.nodes.size()) - 1;
    }

    int add_leaf() { return add_node({NiceKind::Leaf, -1, {}, -1, -1}); }

    int add_introduce(int child, int v) {
        std::vector<int> bag = out_.nodes[child].bag;
        bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
        return add_node({NiceKind::Introduce, v, std::move(bag), child, -1});
    }

    int add_forget(int child, int v) {
        std::vector<int> bag = out_.nodes[child].bag;
        bag.erase(std::find(bag.begin(), bag.end(), v));
        return add_node({NiceKind::Forget, v, std::move(bag), child, -1});
    }

    int add_join(int left, int right) {
        return add_node({NiceKind::Join, -1, out_.nodes[left].bag, left, right});
    }

    // Forget/introduce chain transforming the bag at `from` into `target`.
    int adapt(int from, const std::vector<int>& target) {
        std::vector<int> drop, gain;
        const auto& have = out_.nodes[from].bag;
        std::set_difference(have.begin(), have.end(), target.begin(), target.end(), std::back_inserter(drop));
        std::set_difference(target.begin(), target.end(), have.begin(), have.end(), std::back_inserter(gain));
        int cur = from;
        for (int v : drop) cur = add_forget(cur, v);
        for (int v : gain) cur = add_introduce(cur, v);
        return cur;
    }

    // Returns a nice node whose bag equals dec node t's bag.
    int build(int t) {
        const auto& node = dec_.nodes[t];
        if (node.children.empty()) {
            int cur = add_leaf();
            for (int v : node.bag) cur = add_introduce(cur, v);
            return cur;
        }
        std::vector<int> parts;
        parts.reserve(node.children.size());
        for (int c : node.children) parts.push_back(adapt(build(c), node.bag));
        int cur = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i) cur = add_join(cur, parts[i]);
        return cur;
    }

    const TreeDecomposition& dec_;
    NiceTreeDecomposition out_;
};

}  // namespace

int NiceTreeDecomposition::width() const {
    std::size_t largest = 1;
    for (const auto& node : nodes) largest = std::max(largest, node.bag.size());
    return static_cast<int>(largest) - 1;
}

void NiceTreeDecomposition::validate(const UndirectedGraph& graph) const {
    if (root < 0 || root >= static_cast<int>(nodes.size()))
        throw std::invalid_argument("nice decomposition: bad root");
    if (!nodes[root].bag.empty()) throw std::invalid_argument("nice decomposition: root bag not empty");
    for (std::size_t t = 0; t < nodes.size(); ++t) {
        const auto& node = nodes[t];
        auto bag_without = [](const std::vector<int>& bag, int v) {
            std::vector<int> out;
            for (int x : bag)
                if (x != v) out.push_back(x);
            return out;
        };
        switch (node.kind) {
            case NiceKind::Leaf:
                if (!node.bag.empty() || node.child0 != -1)
                    throw std::invalid_argument("nice decomposition: malformed leaf");
                break;
            case NiceKind::Introduce: {
                if (node.child0 < 0) throw std::invalid_argument("nice decomposition: introduce without child");
                const auto& child = nodes[node.child0];
                if (bag_without(node.bag, node.vertex) != child.bag ||
                    !std::binary_search(node.bag.begin(), node.bag.end(), node.vertex))
                    throw std::invalid_argument("nice decomposition: introduce does not add exactly one vertex");
                break;
            }
            case NiceKind::Forget: {
                if (node.child0 < 0) throw std::invalid_argument("nice decomposition: forget without child");
                const auto& child = nodes[node.child0];
                if (bag_without(child.bag, node.vertex) != node.bag ||
                    !std::binary_search(child.bag.begin(), child.bag.end(), node.vertex))
                    throw std::invalid_argument("nice decomposition: forget does not drop exactly one vertex");
                break;
            }
            case NiceKind::Join:
                if (node.child0 < 0 || node.child1 < 0)
                    throw std::invalid_argument("nice decomposition: join needs two children");
                if (nodes[node.child0].bag != node.bag || nodes[node.child1].bag != node.bag)
                    throw std::invalid_argument("nice decomposition: join children bags differ");
                break;
        }
    }
    // The underlying decomposition properties must hold as well.
    TreeDecomposition flat;
    flat.nodes.resize(nodes.size());
    for (std::size_t t = 0; t < nodes.size(); ++t) {
        flat.nodes[t].bag = nodes[t].bag;
        if (nodes[t].child0 >= 0) flat.nodes[t].children.push_back(nodes[t].child0);
        if (nodes[t].child1 >= 0) flat.nodes[t].children.push_back(nodes[t].child1);
    }
    flat.validate(graph);
}

NiceTreeDecomposition make_nice(const TreeDecomposition& dec) { return Nicifier(dec).run(); }

}  // namespace sbsn

#include "sbsn/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace sbsn {

int UndirectedGraph::num_edges() const {
    int total = 0;
    for (const auto& nb : adj_) total += static_cast<int>(nb.size());
    return total / 2;
}

void UndirectedGraph::add_edge(int u, int v) {
    const int n = num_vertices();
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop not allowed");
    auto insert = [](std::vector<int>& nb, int x) {
        auto it = std::lower_bound(nb.begin(), nb.end(), x);
        if (it == nb.end() || *it != x) nb.insert(it, x);
    };
    insert(adj_[u], v);
    insert(adj_[v], u);
}

bool UndirectedGraph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> UndirectedGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < num_vertices(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<std::vector<int>> UndirectedGraph::components() const {
    const int n = num_vertices();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out[id].push_back(u);
            for (int v : adj_[u])
                if (comp[v] == -1) {
                    comp[v] = id;
                    stack.push_back(v);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool UndirectedGraph::is_forest() const { return !find_cycle().has_value(); }

bool UndirectedGraph::is_cluster_graph() const { return !find_induced_p3().has_value(); }

std::optional<std::vector<int>> UndirectedGraph::find_cycle() const {
    const int n = num_vertices();
    std::vector<int> parent(n, -2);
    for (int s = 0; s < n; ++s) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj_[u]) {
                if (v == parent[u]) continue;
                if (parent[v] != -2) {
                    // Back edge u-v inside the current DFS tree: walk both ends up.
                    std::vector<int> pu{u}, pv{v};
                    auto depth = [&](int x) {
                        int d = 0;
                        for (int y = x; parent[y] >= 0; y = parent[y]) ++d;
                        return d;
                    };
                    int du = depth(u), dv = depth(v);
                    int a = u, b = v;
                    while (du > dv) { a = parent[a]; pu.push_back(a); --du; }
                    while (dv > du) { b = parent[b]; pv.push_back(b); --dv; }
                    while (a != b) {
                        a = parent[a]; pu.push_back(a);
                        b = parent[b]; pv.push_back(b);
                    }
                    std::vector<int> cycle(pu.begin(), pu.end());
                    for (auto it = pv.rbegin(); it != pv.rend(); ++it)
                        if (*it != cycle.back() && *it != cycle.front()) cycle.push_back(*it);
                    return cycle;
                }
                parent[v] = u;
                stack.push_back(v);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::array<int, 3>> UndirectedGraph::find_induced_p3() const {
    for (int v = 0; v < num_vertices(); ++v) {
        const auto& nb = adj_[v];
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (!has_edge(nb[i], nb[j])) return std::array<int, 3>{nb[i], v, nb[j]};
    }
    return std::nullopt;
}

UndirectedGraph UndirectedGraph::remove_vertices(const std::vector<int>& removed,
                                                 std::vector<int>* old_of_new) const {
    const int n = num_vertices();
    std::vector<char> gone(n, 0);
    for (int v : removed) gone.at(v) = 1;
    std::vector<int> new_of_old(n, -1);
    int m = 0;
    for (int v = 0; v < n; ++v)
        if (!gone[v]) new_of_old[v] = m++;
    UndirectedGraph out(m);
    if (old_of_new) {
        old_of_new->assign(m, -1);
        for (int v = 0; v < n; ++v)
            if (new_of_old[v] >= 0) (*old_of_new)[new_of_old[v]] = v;
    }
    for (int u = 0; u < n; ++u) {
        if (gone[u]) continue;
        for (int v : adj_[u])
            if (u < v && !gone[v]) out.add_edge(new_of_old[u], new_of_old[v]);
    }
    return out;
}

}  // namespace sbsn

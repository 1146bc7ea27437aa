#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace sbsn {

// Simple undirected graph on vertices 0..n-1. No loops, no parallel edges.
class UndirectedGraph {
  public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(int num_vertices) : adj_(num_vertices) {}

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const;

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    std::vector<std::pair<int, int>> edges() const;
    std::vector<std::vector<int>> components() const;
    bool is_forest() const;
    bool is_cluster_graph() const;

    // Some cycle as a vertex sequence, or nullopt on forests.
    std::optional<std::vector<int>> find_cycle() const;
    // Some induced path u-v-w (u,w non-adjacent), or nullopt on cluster graphs.
    std::optional<std::array<int, 3>> find_induced_p3() const;

    // Subgraph after deleting `removed` (sorted not required). Fills old_of_new
    // with the original index of each surviving vertex when non-null.
    UndirectedGraph remove_vertices(const std::vector<int>& removed,
                                    std::vector<int>* old_of_new = nullptr) const;

  private:
    std::vector<std::vector<int>> adj_;  // sorted, unique
};

}  // namespace sbsn

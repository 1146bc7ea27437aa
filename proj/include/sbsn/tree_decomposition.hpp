#pragma once

#include <vector>

#include "sbsn/graph.hpp"

namespace sbsn {

struct DecompositionNode {
    std::vector<int> bag;        // sorted vertex subset
    std::vector<int> children;
};

// Rooted tree decomposition. The root is the unique node that no other node
// lists as a child.
struct TreeDecomposition {
    std::vector<DecompositionNode> nodes;

    int width() const;
    int find_root() const;
    // Checks vertex coverage, edge coverage and bag-subtree connectivity;
    // throws naming the offending vertex or edge.
    void validate(const UndirectedGraph& graph) const;
};

// Forests get their natural width-1 decomposition; everything else goes
// through a greedy minimum-fill-in elimination order.
TreeDecomposition build_tree_decomposition(const UndirectedGraph& graph);

enum class NiceKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
    NiceKind kind = NiceKind::Leaf;
    int vertex = -1;             // introduced/forgotten vertex
    std::vector<int> bag;        // sorted
    int child0 = -1;
    int child1 = -1;             // joins only
};

// Rooted at an empty bag; leaves are empty bags; introduce/forget steps change
// the bag by exactly one vertex; join children repeat the parent bag.
struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;

    int width() const;
    void validate(const UndirectedGraph& graph) const;
};

NiceTreeDecomposition make_nice(const TreeDecomposition& dec);

}  // namespace sbsn

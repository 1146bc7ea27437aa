#pragma once

#include <map>
#include <string>
#include <vector>

#include "sbsn/election.hpp"
#include "sbsn/graph.hpp"

namespace sbsn {

// Output of an instance construction from a source problem. source_to_voter
// maps source objects (graph vertices or sets) onto the voters that realize
// them, so source solutions translate into shift vectors.
struct ReductionRecord {
    Instance instance;
    std::string source;
    std::map<std::string, std::int64_t> params;
    std::vector<int> source_to_voter;

    ShiftVector map_solution(const std::vector<int>& chosen) const;
};

// Dominating set on an arbitrary graph: original vertices plus n-1 isolated
// padding voters, unit weights on original edges, identity costs, budget k.
ReductionRecord reduce_ds_to_sbon_general(const UndirectedGraph& graph, int k);

// Dominating set on a complete weighted graph: weight 1 on original edges,
// 1/(2k) elsewhere; padding voters carry coefficient k+1. Requires k >= 1.
ReductionRecord reduce_ds_to_sbon_complete(const UndirectedGraph& graph, int k);

// Set cover as a bipartite network: elements and sets plus m-k+1 voters
// adjacent to every set and n+k-1 isolated ones; 2(n+m) voters total and a
// supporter target of n+m+1. `directed` orients every edge from the set side.
ReductionRecord reduce_setcover_to_sbon_bipartite(int universe_size, const std::vector<std::vector<int>>& sets, int k,
                                                  bool directed = false);

// (k,t)-dominating set on the graph itself with a supporter threshold of t.
ReductionRecord reduce_ktds_to_sbon(const UndirectedGraph& graph, int k, int t);

struct PaddedKtds {
    UndirectedGraph graph;
    int k = 0;
    int t = 0;
};

// Pads a dominating set instance with n-1 isolated vertices; asking for n
// dominated vertices in the padded graph is equivalent to full domination.
PaddedKtds pad_ds_to_ktds(const UndirectedGraph& graph, int k);

}  // namespace sbsn

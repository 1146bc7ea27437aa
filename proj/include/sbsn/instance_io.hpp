#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sbsn/election.hpp"
#include "sbsn/graph.hpp"
#include "sbsn/reductions.hpp"
#include "sbsn/tree_decomposition.hpp"

namespace sbsn {

// One instance file: the election itself, optional provenance metadata and an
// optional externally supplied tree decomposition.
struct InstanceDocument {
    Instance instance;
    std::string source;                            // metadata: reduction provenance
    std::map<std::string, std::int64_t> params;    // metadata: source parameters
    std::optional<TreeDecomposition> decomposition;
};

std::string serialize_instance(const InstanceDocument& doc);
InstanceDocument parse_instance(const std::string& text);

InstanceDocument load_instance_file(const std::string& path);
void save_instance_file(const std::string& path, const InstanceDocument& doc);

InstanceDocument document_for(const ReductionRecord& record);

// Plain-text graph: first line "<n> <edge count>", then one "u v" line per
// edge, 0-based.
UndirectedGraph parse_graph_text(const std::string& text);

// Plain-text set system: first line "<universe size> <set count>", then one
// line per set: "<size> e1 e2 ...", 0-based elements.
struct SetSystem {
    int universe_size = 0;
    std::vector<std::vector<int>> sets;
};
SetSystem parse_setcover_text(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace sbsn

#include "sbsn/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sbsn {

namespace {

using Json = nlohmann::ordered_json;

Json cost_to_json(const VoterCost& cost) {
    Json out;
    switch (cost.kind) {
        case CostKind::Identity:
            out["kind"] = "identity";
            break;
        case CostKind::Linear:
            out["kind"] = "linear";
            out["coeff"] = cost.coeff;
            break;
        case CostKind::Table:
            out["kind"] = "table";
            out["values"] = cost.table;
            break;
    }
    return out;
}

VoterCost cost_from_json(const Json& j) {
    VoterCost cost;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "identity") {
        cost.kind = CostKind::Identity;
    } else if (kind == "linear") {
        cost.kind = CostKind::Linear;
        cost.coeff = j.at("coeff").get<std::int64_t>();
    } else if (kind == "table") {
        cost.kind = CostKind::Table;
        cost.table = j.at("values").get<std::vector<std::int64_t>>();
    } else {
        throw std::invalid_argument("unknown cost kind: " + kind);
    }
    return cost;
}

}  // namespace

std::string serialize_instance(const InstanceDocument& doc) {
    const Instance& instance = doc.instance;
    Json j;
    j["num_candidates"] = instance.num_candidates;
    j["preferred"] = instance.preferred;
    j["rule"] = instance.rule == Rule::Majority ? "majority" : "plurality";
    j["tiebreak"] = instance.tiebreak;
    j["budget"] = instance.budget;
    j["voters"] = Json::array();
    for (int i = 0; i < instance.num_voters(); ++i) {
        Json voter;
        voter["ranking"] = instance.profile.rankings[i];
        voter["cost"] = cost_to_json(instance.costs.per_voter[i]);
        j["voters"].push_back(std::move(voter));
    }
    j["arcs"] = Json::array();
    for (const Arc& a : instance.network.arcs()) {
        Json arc;
        arc["from"] = a.from;
        arc["to"] = a.to;
        arc["weight"] = Json{{"num", a.weight.num}, {"den", a.weight.den}};
        j["arcs"].push_back(std::move(arc));
    }
    if (instance.supporter_threshold || !doc.source.empty() || !doc.params.empty()) {
        Json meta;
        if (!doc.source.empty()) meta["source"] = doc.source;
        if (!doc.params.empty()) meta["params"] = doc.params;
        if (instance.supporter_threshold) meta["threshold"] = *instance.supporter_threshold;
        j["metadata"] = std::move(meta);
    }
    if (doc.decomposition) {
        Json nodes = Json::array();
        for (const auto& node : doc.decomposition->nodes) {
            Json entry;
            entry["bag"] = node.bag;
            entry["children"] = node.children;
            nodes.push_back(std::move(entry));
        }
        j["tree_decomposition"] = std::move(nodes);
    }
    return j.dump(2) + "\n";
}

InstanceDocument parse_instance(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("instance parse error: ") + e.what());
    }
    InstanceDocument doc;
    Instance& instance = doc.instance;
    instance.num_candidates = j.at("num_candidates").get<int>();
    instance.preferred = j.at("preferred").get<int>();
    const std::string rule = j.at("rule").get<std::string>();
    if (rule == "majority")
        instance.rule = Rule::Majority;
    else if (rule == "plurality")
        instance.rule = Rule::Plurality;
    else
        throw std::invalid_argument("unknown rule: " + rule);
    instance.tiebreak = j.at("tiebreak").get<std::vector<int>>();
    instance.budget = j.at("budget").get<std::int64_t>();
    const Json& voters = j.at("voters");
    for (const Json& voter : voters) {
        instance.profile.rankings.push_back(voter.at("ranking").get<std::vector<int>>());
        instance.costs.per_voter.push_back(cost_from_json(voter.at("cost")));
    }
    std::vector<Arc> arcs;
    for (const Json& arc : j.value("arcs", Json::array())) {
        const Json& w = arc.at("weight");
        arcs.push_back({arc.at("from").get<int>(), arc.at("to").get<int>(),
                        Rational(w.at("num").get<std::int64_t>(), w.at("den").get<std::int64_t>())});
    }
    instance.network = InfluenceNetwork(static_cast<int>(instance.profile.rankings.size()), std::move(arcs));
    if (j.contains("metadata")) {
        const Json& meta = j["metadata"];
        doc.source = meta.value("source", "");
        if (meta.contains("params"))
            doc.params = meta["params"].get<std::map<std::string, std::int64_t>>();
        if (meta.contains("threshold")) instance.supporter_threshold = meta["threshold"].get<std::int64_t>();
    }
    if (j.contains("tree_decomposition")) {
        TreeDecomposition dec;
        for (const Json& entry : j["tree_decomposition"]) {
            DecompositionNode node;
            node.bag = entry.at("bag").get<std::vector<int>>();
            node.children = entry.at("children").get<std::vector<int>>();
            dec.nodes.push_back(std::move(node));
        }
        doc.decomposition = std::move(dec);
    }
    instance.validate();
    if (doc.decomposition) doc.decomposition->validate(instance.network.undirected_support());
    return doc;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

InstanceDocument load_instance_file(const std::string& path) { return parse_instance(read_file(path)); }

void save_instance_file(const std::string& path, const InstanceDocument& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << serialize_instance(doc);
}

InstanceDocument document_for(const ReductionRecord& record) {
    InstanceDocument doc;
    doc.instance = record.instance;
    doc.source = record.source;
    doc.params = record.params;
    return doc;
}

UndirectedGraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("graph file: missing header");
    if (n < 0 || m < 0) throw std::invalid_argument("graph file: negative header entry");
    UndirectedGraph g(n);
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw std::invalid_argument("graph file: missing edge " + std::to_string(i));
        g.add_edge(u, v);
    }
    return g;
}

SetSystem parse_setcover_text(const std::string& text) {
    std::istringstream in(text);
    SetSystem system;
    int sets = 0;
    if (!(in >> system.universe_size >> sets)) throw std::invalid_argument("set system file: missing header");
    for (int i = 0; i < sets; ++i) {
        int size = 0;
        if (!(in >> size) || size < 0) throw std::invalid_argument("set system file: bad set size");
        std::vector<int> set(size);
        for (int& e : set)
            if (!(in >> e)) throw std::invalid_argument("set system file: truncated set");
        system.sets.push_back(std::move(set));
    }
    return system;
}

}  // namespace sbsn

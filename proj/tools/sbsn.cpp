// Command line front end: solve, verify, generate, reduce and bench over the
// JSON instance format documented in the README.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sbsn/cluster.hpp"
#include "sbsn/detect.hpp"
#include "sbsn/fpt.hpp"
#include "sbsn/generate.hpp"
#include "sbsn/instance_io.hpp"
#include "sbsn/oracle.hpp"
#include "sbsn/path_dp.hpp"
#include "sbsn/poly_solvers.hpp"
#include "sbsn/treewidth_dp.hpp"

namespace {

constexpr const char* kVersion = "sbsn 1.0.0";

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitError = 2;

std::string join_shifts(const sbsn::ShiftVector& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

sbsn::ShiftVector parse_shifts(const std::string& text) {
    sbsn::ShiftVector out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in the shift list");
        out.push_back(std::stoi(item));
    }
    return out;
}

struct SolverRegistry {
    std::int64_t oracle_guard = 24;
    std::optional<int> partial_dom_cap;
    std::optional<sbsn::TreeDecomposition> decomposition;

    sbsn::SolveOutcome run(const std::string& algo, const sbsn::Instance& instance) const {
        using namespace sbsn;
        if (algo == "auto") return solve_auto(instance, {oracle_guard});
        if (algo == "oracle") {
            const std::int64_t size =
                static_cast<std::int64_t>(instance.num_voters()) * (instance.num_candidates - 1);
            if (size > oracle_guard)
                throw std::invalid_argument("oracle size guard exceeded (" + std::to_string(size) + " > " +
                                            std::to_string(oracle_guard) + "); raise --oracle-guard to override");
            return brute_force_min_cost(instance);
        }
        if (algo == "complete-majority") return solve_complete_majority(instance);
        if (algo == "complete-plurality") return solve_complete_plurality(instance);
        if (algo == "tournament") return solve_transitive_tournament(instance);
        if (algo == "cluster") return solve_cluster_dp(instance);
        if (algo == "path") return solve_path_dp(instance);
        if (algo == "treewidth") {
            if (decomposition) return solve_treewidth_dp(instance, make_nice(*decomposition));
            return solve_treewidth(instance);
        }
        if (algo == "fvs") return solve_via_fvs(instance);
        if (algo == "cvd") return solve_via_cvd(instance);
        if (algo == "partial-dom") return solve_via_partial_domination(instance, partial_dom_cap);
        throw std::invalid_argument("unknown algorithm: " + algo);
    }
};

sbsn::TreeDecomposition load_decomposition_file(const std::string& path) {
    // A JSON array using the same node schema as the instance field.
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(sbsn::read_file(path));
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("decomposition parse error: ") + e.what());
    }
    sbsn::TreeDecomposition dec;
    for (const auto& entry : j) {
        sbsn::DecompositionNode node;
        node.bag = entry.at("bag").get<std::vector<int>>();
        node.children = entry.at("children").get<std::vector<int>>();
        dec.nodes.push_back(std::move(node));
    }
    return dec;
}

int cmd_solve(const std::string& path, const std::string& algo, const SolverRegistry& registry) {
    const sbsn::InstanceDocument doc = sbsn::load_instance_file(path);
    SolverRegistry local = registry;
    if (!local.decomposition && doc.decomposition) local.decomposition = doc.decomposition;
    const sbsn::DetectedClass detected = sbsn::detect_class(doc.instance);
    const sbsn::SolveOutcome out = local.run(algo, doc.instance);

    std::cout << "instance: " << path << "\n";
    std::cout << "class: " << sbsn::to_string(detected.cls);
    if (detected.width >= 0) std::cout << " (width " << detected.width << ")";
    std::cout << "\n";
    std::cout << "algorithm: " << out.algorithm << "\n";
    std::cout << "feasible: " << (out.feasible ? "yes" : "no") << "\n";
    if (out.feasible) {
        std::cout << "cost: " << *out.cost << "\n";
        std::cout << "witness: " << join_shifts(*out.witness) << "\n";
    }
    std::cout << "stats: states=" << out.stats.states << " nodes=" << out.stats.nodes
              << " micros=" << out.stats.micros;
    if (!out.stats.param.empty()) std::cout << " " << out.stats.param;
    std::cout << "\n";
    return out.feasible ? kExitFeasible : kExitInfeasible;
}

int cmd_verify(const std::string& path, const std::string& shifts_text) {
    const sbsn::InstanceDocument doc = sbsn::load_instance_file(path);
    const sbsn::Instance& instance = doc.instance;
    const sbsn::ShiftVector shifts = parse_shifts(shifts_text);
    sbsn::validate_shift_vector(instance, shifts);

    const std::int64_t cost = sbsn::shift_cost(instance, shifts);
    const auto effective = sbsn::effective_shifts(instance, shifts);
    const sbsn::PreferenceProfile after = sbsn::apply_shift(instance, shifts);

    std::cout << "cost: " << cost << " (budget " << instance.budget << ")\n";
    std::cout << "effective shifts: ";
    for (std::size_t i = 0; i < effective.size(); ++i) std::cout << (i ? "," : "") << effective[i];
    std::cout << "\n";
    if (instance.supporter_threshold) {
        std::cout << "supporters: " << sbsn::count_supporters(instance, after) << " (threshold "
                  << *instance.supporter_threshold << ")\n";
    } else if (instance.rule == sbsn::Rule::Majority) {
        std::cout << "supporters: " << sbsn::count_supporters(instance, after) << " (quota "
                  << instance.majority_quota() << ")\n";
    } else {
        const int w = sbsn::winner(after, sbsn::Rule::Plurality, instance.tiebreak);
        std::cout << "winner: candidate " << w << "\n";
    }
    if (cost > instance.budget) {
        std::cout << "result: FAIL (budget exceeded)\n";
        return kExitInfeasible;
    }
    if (!sbsn::preferred_wins(instance, after)) {
        std::cout << "result: FAIL (preferred candidate does not win)\n";
        return kExitInfeasible;
    }
    std::cout << "result: OK\n";
    return kExitFeasible;
}

int cmd_generate(const std::string& cls, const sbsn::GeneratorOptions& options, std::uint64_t seed,
                 const std::string& out_path) {
    sbsn::InstanceDocument doc;
    doc.instance = sbsn::generate_class(cls, options, seed);
    doc.source = "generator";
    doc.params = {{"seed", static_cast<std::int64_t>(seed)}};
    if (out_path.empty() || out_path == "-")
        std::cout << sbsn::serialize_instance(doc);
    else
        sbsn::save_instance_file(out_path, doc);
    return kExitFeasible;
}

int cmd_reduce(const std::string& from, const std::string& source_path, int k, std::optional<int> t, bool directed,
               const std::string& out_path) {
    sbsn::ReductionRecord record;
    if (from == "ds") {
        record = sbsn::reduce_ds_to_sbon_general(sbsn::parse_graph_text(sbsn::read_file(source_path)), k);
    } else if (from == "ds-complete") {
        record = sbsn::reduce_ds_to_sbon_complete(sbsn::parse_graph_text(sbsn::read_file(source_path)), k);
    } else if (from == "setcover") {
        const sbsn::SetSystem system = sbsn::parse_setcover_text(sbsn::read_file(source_path));
        record = sbsn::reduce_setcover_to_sbon_bipartite(system.universe_size, system.sets, k, directed);
    } else if (from == "ktds") {
        const sbsn::UndirectedGraph graph = sbsn::parse_graph_text(sbsn::read_file(source_path));
        const int threshold = t.value_or((graph.num_vertices() + 2) / 2);
        record = sbsn::reduce_ktds_to_sbon(graph, k, threshold);
    } else {
        throw std::invalid_argument("unknown reduction source: " + from);
    }
    const sbsn::InstanceDocument doc = sbsn::document_for(record);
    if (out_path.empty() || out_path == "-")
        std::cout << sbsn::serialize_instance(doc);
    else
        sbsn::save_instance_file(out_path, doc);
    return kExitFeasible;
}

struct BenchRow {
    std::string instance;
    std::string algorithm;
    bool applicable = false;
    bool feasible = false;
    std::int64_t cost = -1;
    std::string param;
    std::uint64_t states = 0;
    std::int64_t micros = 0;
    std::string witness;
};

int cmd_bench(const std::string& corpus, const std::vector<std::string>& algos, int repeat,
              const std::string& csv_path, const SolverRegistry& registry) {
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(corpus))
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());

    std::vector<BenchRow> rows;
    bool disagreement = false;
    for (const std::string& file : files) {
        const sbsn::InstanceDocument doc = sbsn::load_instance_file(file);
        std::optional<std::pair<bool, std::int64_t>> agreed;
        std::string first_algo, first_witness;
        for (const std::string& algo : algos) {
            BenchRow row;
            row.instance = fs::path(file).filename().string();
            row.algorithm = algo;
            try {
                sbsn::SolveOutcome out = registry.run(algo, doc.instance);
                std::int64_t best_micros = out.stats.micros;
                for (int r = 1; r < repeat; ++r)
                    best_micros = std::min(best_micros, registry.run(algo, doc.instance).stats.micros);
                row.applicable = true;
                row.feasible = out.feasible;
                row.cost = out.feasible ? *out.cost : -1;
                row.param = out.stats.param;
                row.states = out.stats.states;
                row.micros = best_micros;
                row.witness = out.feasible ? join_shifts(*out.witness) : "";
                const std::pair<bool, std::int64_t> key{row.feasible, row.cost};
                if (!agreed) {
                    agreed = key;
                    first_algo = algo;
                    first_witness = row.witness;
                } else if (*agreed != key) {
                    disagreement = true;
                    std::cerr << "DISAGREEMENT on " << row.instance << ":\n"
                              << "  " << first_algo << ": feasible=" << agreed->first << " cost=" << agreed->second
                              << " witness=" << first_witness << "\n"
                              << "  " << algo << ": feasible=" << row.feasible << " cost=" << row.cost
                              << " witness=" << row.witness << "\n";
                }
            } catch (const std::invalid_argument&) {
                row.applicable = false;  // precondition violation: skip
            }
            rows.push_back(std::move(row));
        }
    }

    std::ostringstream csv;
    csv << "instance,algorithm,feasible,cost,param,states,micros\n";
    std::cout << "instance                         algorithm           feasible  cost  micros\n";
    for (const BenchRow& row : rows) {
        if (!row.applicable) continue;
        csv << row.instance << ',' << row.algorithm << ',' << (row.feasible ? 1 : 0) << ',' << row.cost << ",\""
            << row.param << "\"," << row.states << ',' << row.micros << "\n";
        std::cout << row.instance;
        for (std::size_t pad = row.instance.size(); pad < 33; ++pad) std::cout << ' ';
        std::cout << row.algorithm;
        for (std::size_t pad = row.algorithm.size(); pad < 20; ++pad) std::cout << ' ';
        std::cout << (row.feasible ? "yes" : "no ") << "       " << row.cost << "     " << row.micros << "\n";
    }
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw std::invalid_argument("cannot write " + csv_path);
        out << csv.str();
    }
    if (disagreement) {
        std::cerr << "bench: algorithms disagree\n";
        return kExitError;
    }
    return kExitFeasible;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solvers for shift bribery on influence networks"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    SolverRegistry registry;

    auto* solve = app.add_subcommand("solve", "Solve an instance file");
    std::string solve_path, solve_algo = "auto", solve_dec;
    int solve_kmax = -1;
    solve->add_option("instance", solve_path, "Instance file")->required();
    solve->add_option("--algo", solve_algo,
                      "auto|oracle|complete-majority|complete-plurality|tournament|cluster|path|treewidth|fvs|cvd|"
                      "partial-dom");
    solve->add_option("--decomposition", solve_dec, "External tree decomposition (JSON node array)");
    solve->add_option("--oracle-guard", registry.oracle_guard, "Max n*(m-1) accepted by the oracle");
    solve->add_option("--kmax", solve_kmax, "Search cap for partial-dom");

    auto* verify_cmd = app.add_subcommand("verify", "Verify a shift vector against an instance");
    std::string verify_path, verify_shifts;
    verify_cmd->add_option("instance", verify_path, "Instance file")->required();
    verify_cmd->add_option("--shifts", verify_shifts, "Comma separated shift amounts")->required();

    auto* generate = app.add_subcommand("generate", "Emit a seeded random instance");
    std::string gen_class, gen_cost = "identity", gen_rule = "majority", gen_out;
    sbsn::GeneratorOptions gen_options;
    std::uint64_t gen_seed = 0;
    generate->add_option("--class", gen_class, "complete|tournament|cluster|path|forest|general")->required();
    generate->add_option("--n", gen_options.num_voters, "Voter count")->required();
    generate->add_option("--seed", gen_seed, "RNG seed")->required();
    generate->add_option("--m", gen_options.num_candidates, "Candidate count (where the class allows it)");
    generate->add_option("--rule", gen_rule, "majority|plurality");
    generate->add_option("--cost", gen_cost, "identity|linear");
    generate->add_option("--supporter-frac", gen_options.supporter_fraction, "Initial supporter probability");
    generate->add_option("--edge-prob", gen_options.edge_probability, "Edge probability (general class)");
    generate->add_option("--budget", gen_options.budget, "Budget (default: max(1, n/3))");
    generate->add_option("--out", gen_out, "Output file (default: stdout)");

    auto* reduce = app.add_subcommand("reduce", "Build an instance from a source problem");
    std::string red_from, red_source, red_out;
    int red_k = 1, red_t_raw = -1;
    bool red_directed = false;
    reduce->add_option("--from", red_from, "ds|ds-complete|setcover|ktds")->required();
    reduce->add_option("source", red_source, "Source file (graph or set system)")->required();
    reduce->add_option("-k,--k", red_k, "Solution size / budget")->required();
    reduce->add_option("-t,--t", red_t_raw, "Coverage target (ktds; default majority quota)");
    reduce->add_flag("--directed", red_directed, "Directed variant (setcover)");
    reduce->add_option("--out", red_out, "Output file (default: stdout)");

    auto* bench = app.add_subcommand("bench", "Run algorithms across a corpus and cross-check results");
    std::string bench_corpus, bench_algos = "auto", bench_csv;
    int bench_repeat = 1;
    bench->add_option("--corpus", bench_corpus, "Directory of .json instances")->required();
    bench->add_option("--algos", bench_algos, "Comma separated algorithm list");
    bench->add_option("--repeat", bench_repeat, "Timing repetitions per pair");
    bench->add_option("--csv", bench_csv, "Write the machine readable report here");
    bench->add_option("--oracle-guard", registry.oracle_guard, "Max n*(m-1) accepted by the oracle");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            if (!solve_dec.empty()) registry.decomposition = load_decomposition_file(solve_dec);
            if (solve_kmax >= 0) registry.partial_dom_cap = solve_kmax;
            return cmd_solve(solve_path, solve_algo, registry);
        }
        if (verify_cmd->parsed()) return cmd_verify(verify_path, verify_shifts);
        if (generate->parsed()) {
            gen_options.rule = gen_rule == "plurality" ? sbsn::Rule::Plurality : sbsn::Rule::Majority;
            if (gen_cost == "linear")
                gen_options.cost = sbsn::CostKind::Linear;
            else if (gen_cost != "identity")
                throw std::invalid_argument("unknown cost kind: " + gen_cost);
            return cmd_generate(gen_class, gen_options, gen_seed, gen_out);
        }
        if (reduce->parsed()) {
            std::optional<int> t;
            if (red_t_raw >= 0) t = red_t_raw;
            return cmd_reduce(red_from, red_source, red_k, t, red_directed, red_out);
        }
        if (bench->parsed()) {
            std::vector<std::string> algos;
            std::stringstream stream(bench_algos);
            std::string item;
            while (std::getline(stream, item, ',')) algos.push_back(item);
            return cmd_bench(bench_corpus, algos, bench_repeat, bench_csv, registry);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sbsn {

struct SolveStats {
    std::uint64_t states = 0;   // DP cells / table entries / outer branches
    std::uint64_t nodes = 0;    // search nodes / decomposition nodes
    std::int64_t micros = 0;    // wall time
    std::string param;          // solver-specific parameters, e.g. "w=2 kappa=3"
};

// Result of one solver invocation. feasible, cost and witness are always
// present or absent together; any witness passes verify on the instance.
struct SolveOutcome {
    bool feasible = false;
    std::optional<std::int64_t> cost;
    std::optional<std::vector<int>> witness;
    std::string algorithm;
    SolveStats stats;

    static SolveOutcome infeasible_outcome(std::string algo) {
        SolveOutcome out;
        out.algorithm = std::move(algo);
        return out;
    }

    static SolveOutcome solved(std::string algo, std::int64_t cost, std::vector<int> witness) {
        SolveOutcome out;
        out.feasible = true;
        out.cost = cost;
        out.witness = std::move(witness);
        out.algorithm = std::move(algo);
        return out;
    }
};

}  // namespace sbsn

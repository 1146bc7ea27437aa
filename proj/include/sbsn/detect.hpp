#pragma once

#include <string>

#include "sbsn/election.hpp"
#include "sbsn/outcome.hpp"

namespace sbsn {

enum class GraphClass {
    CompleteUnit,
    TransitiveTournament,
    Cluster,
    DirectedPath,
    Forest,
    BoundedTreewidth,
    General,
};

struct DetectedClass {
    GraphClass cls = GraphClass::General;
    int width = -1;  // BoundedTreewidth only: achieved decomposition width
};

const char* to_string(GraphClass cls);

// Structural classification in fixed priority order; deterministic.
DetectedClass detect_class(const Instance& instance);

struct AutoSolveOptions {
    // Largest n*(m-1) the fallback oracle accepts.
    std::int64_t oracle_guard = 24;
};

// Picks the first specialized solver whose preconditions hold, falling back to
// the oracle below the size guard. Throws when nothing applies.
SolveOutcome solve_auto(const Instance& instance, const AutoSolveOptions& options = {});

}  // namespace sbsn

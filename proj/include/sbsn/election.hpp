#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sbsn/graph.hpp"
#include "sbsn/rational.hpp"

namespace sbsn {

enum class Rule { Majority, Plurality };

// Returned by winner() under the majority rule when no candidate reaches the quota.
constexpr int kNoMajority = -1;

// Per-voter direct shift amounts, each in {0, ..., m-1}.
using ShiftVector = std::vector<int>;

struct PreferenceProfile {
    // rankings[i][p] = candidate at position p of voter i's order; position 0 is the top.
    std::vector<std::vector<int>> rankings;

    int num_voters() const { return static_cast<int>(rankings.size()); }
    int position_of(int voter, int candidate) const;
    void validate(int num_candidates) const;
};

struct Arc {
    int from = 0;
    int to = 0;
    Rational weight;
};

// Directed influence network over voters. At most one arc per ordered pair, no
// self-arcs, exact rational weights. Undirected graphs are encoded as two
// opposing arcs of equal weight.
class InfluenceNetwork {
  public:
    InfluenceNetwork() = default;
    InfluenceNetwork(int num_voters, std::vector<Arc> arcs);

    int num_voters() const { return n_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<std::pair<int, Rational>>& in_arcs(int voter) const { return in_[voter]; }
    const std::vector<int>& out_neighbors(int voter) const { return out_[voter]; }
    bool has_arc(int from, int to) const;

    bool all_weights_one() const;
    bool is_symmetric_unit() const;
    bool is_complete_unit() const;
    UndirectedGraph undirected_support() const;

  private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<std::pair<int, Rational>>> in_;
    std::vector<std::vector<int>> out_;
};

enum class CostKind { Identity, Linear, Table };

// One voter's shift cost function over the domain {0, ..., m-1}; always 0 at 0.
struct VoterCost {
    CostKind kind = CostKind::Identity;
    std::int64_t coeff = 1;            // Linear only
    std::vector<std::int64_t> table;   // Table only; size m, table[0] == 0

    std::int64_t eval(int shift, int num_candidates) const;
    bool is_linear() const { return kind != CostKind::Table; }
    std::int64_t linear_coeff() const { return kind == CostKind::Identity ? 1 : coeff; }
    void validate(int num_candidates) const;
};

struct CostFamily {
    std::vector<VoterCost> per_voter;

    int num_voters() const { return static_cast<int>(per_voter.size()); }
    bool all_linear() const;
    void validate(int num_candidates) const;
};

struct Instance {
    int num_candidates = 2;
    int preferred = 1;
    Rule rule = Rule::Majority;
    std::vector<int> tiebreak;   // candidate priority order used to break ties
    PreferenceProfile profile;
    InfluenceNetwork network;
    CostFamily costs;
    std::int64_t budget = 0;
    // When set, the win condition becomes "preferred topped by at least this
    // many voters" regardless of rule. Used by reduction instances.
    std::optional<std::int64_t> supporter_threshold;

    int num_voters() const { return profile.num_voters(); }
    void validate() const;

    // 0-based rank of the preferred candidate in voter i's order; equals the
    // effective shift needed to put it on top.
    int shifts_to_top(int voter) const { return profile.position_of(voter, preferred); }
    bool tops_preferred(int voter) const { return shifts_to_top(voter) == 0; }
    int initial_supporters() const;

    std::int64_t majority_quota() const { return (num_voters() + 2) / 2; }  // ceil((n+1)/2)
    std::int64_t target_supporters() const { return supporter_threshold.value_or(majority_quota()); }
    std::int64_t unit_cost(int voter) const { return costs.per_voter[voter].eval(1, num_candidates); }
};

// s'_i = s_i + sum over in-arcs (j,i) of floor(s_j * w(j,i)), exact arithmetic.
std::vector<std::int64_t> effective_shifts(const Instance& instance, const ShiftVector& s);

// Moves the preferred candidate left by min(s'_i, shifts_to_top(i)) in every vote.
PreferenceProfile apply_shift(const Instance& instance, const ShiftVector& s);

// Plurality: most top positions, ties by tiebreak priority. Majority: requires
// exactly two candidates; the candidate topped by at least ceil((n+1)/2)
// voters, or kNoMajority.
int winner(const PreferenceProfile& profile, Rule rule, const std::vector<int>& tiebreak);

std::int64_t shift_cost(const Instance& instance, const ShiftVector& s);

int count_supporters(const Instance& instance, const PreferenceProfile& profile);

// Win test used by verify and all solvers: supporter-threshold override when
// present, else quota count under majority, else plurality winner identity.
bool preferred_wins(const Instance& instance, const PreferenceProfile& shifted);

// True iff the shifts are affordable and make the preferred candidate win.
bool verify(const Instance& instance, const ShiftVector& s);

void validate_shift_vector(const Instance& instance, const ShiftVector& s);

}  // namespace sbsn

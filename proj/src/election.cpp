#include "sbsn/election.hpp"

#include <algorithm>
#include <stdexcept>

namespace sbsn {

int PreferenceProfile::position_of(int voter, int candidate) const {
    const auto& r = rankings[voter];
    for (int p = 0; p < static_cast<int>(r.size()); ++p)
        if (r[p] == candidate) return p;
    throw std::invalid_argument("candidate " + std::to_string(candidate) + " missing from ranking of voter " +
                                std::to_string(voter));
}

void PreferenceProfile::validate(int num_candidates) const {
    for (int i = 0; i < num_voters(); ++i) {
        const auto& r = rankings[i];
        if (static_cast<int>(r.size()) != num_candidates)
            throw std::invalid_argument("voter " + std::to_string(i) + ": ranking length != number of candidates");
        std::vector<char> seen(num_candidates, 0);
        for (int c : r) {
            if (c < 0 || c >= num_candidates || seen[c])
                throw std::invalid_argument("voter " + std::to_string(i) + ": ranking is not a permutation");
            seen[c] = 1;
        }
    }
}

InfluenceNetwork::InfluenceNetwork(int num_voters, std::vector<Arc> arcs)
    : n_(num_voters), arcs_(std::move(arcs)), in_(num_voters), out_(num_voters) {
    if (n_ < 0) throw std::invalid_argument("negative voter count");
    std::vector<std::vector<int>> seen(n_);
    for (const Arc& a : arcs_) {
        if (a.from < 0 || a.from >= n_ || a.to < 0 || a.to >= n_)
            throw std::invalid_argument("arc endpoint out of range");
        if (a.from == a.to) throw std::invalid_argument("self-arc not allowed");
        auto& s = seen[a.from];
        if (std::find(s.begin(), s.end(), a.to) != s.end())
            throw std::invalid_argument("duplicate arc (" + std::to_string(a.from) + "," + std::to_string(a.to) + ")");
        s.push_back(a.to);
        in_[a.to].emplace_back(a.from, a.weight);
        out_[a.from].push_back(a.to);
    }
    for (auto& o : out_) std::sort(o.begin(), o.end());
}

bool InfluenceNetwork::has_arc(int from, int to) const {
    const auto& o = out_[from];
    return std::binary_search(o.begin(), o.end(), to);
}

bool InfluenceNetwork::all_weights_one() const {
    return std::all_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.weight.is_one(); });
}

bool InfluenceNetwork::is_symmetric_unit() const {
    if (!all_weights_one()) return false;
    for (const Arc& a : arcs_)
        if (!has_arc(a.to, a.from)) return false;
    return true;
}

bool InfluenceNetwork::is_complete_unit() const {
    if (!is_symmetric_unit()) return false;
    return static_cast<std::int64_t>(arcs_.size()) == static_cast<std::int64_t>(n_) * (n_ - 1);
}

UndirectedGraph InfluenceNetwork::undirected_support() const {
    UndirectedGraph g(n_);
    for (const Arc& a : arcs_) g.add_edge(a.from, a.to);
    return g;
}

std::int64_t VoterCost::eval(int shift, int num_candidates) const {
    if (shift < 0 || shift > num_candidates - 1)
        throw std::invalid_argument("shift " + std::to_string(shift) + " outside cost function domain");
    switch (kind) {
        case CostKind::Identity: return shift;
        case CostKind::Linear: return coeff * shift;
        case CostKind::Table: return table[shift];
    }
    throw std::logic_error("unreachable");
}

void VoterCost::validate(int num_candidates) const {
    switch (kind) {
        case CostKind::Identity: return;
        case CostKind::Linear:
            if (coeff < 0) throw std::invalid_argument("negative linear cost coefficient");
            return;
        case CostKind::Table:
            if (static_cast<int>(table.size()) != num_candidates)
                throw std::invalid_argument("cost table must have exactly m entries");
            if (table[0] != 0) throw std::invalid_argument("cost of zero shift must be 0");
            for (std::int64_t v : table)
                if (v < 0) throw std::invalid_argument("negative cost table entry");
            return;
    }
}

bool CostFamily::all_linear() const {
    return std::all_of(per_voter.begin(), per_voter.end(), [](const VoterCost& c) { return c.is_linear(); });
}

void CostFamily::validate(int num_candidates) const {
    for (const VoterCost& c : per_voter) c.validate(num_candidates);
}

void Instance::validate() const {
    if (num_candidates < 2) throw std::invalid_argument("need at least two candidates");
    const int n = profile.num_voters();
    if (n < 1) throw std::invalid_argument("need at least one voter");
    if (network.num_voters() != n || costs.num_voters() != n)
        throw std::invalid_argument("profile, network and costs disagree on the voter count");
    if (preferred < 0 || preferred >= num_candidates) throw std::invalid_argument("invalid preferred candidate");
    if (budget < 0) throw std::invalid_argument("negative budget");
    profile.validate(num_candidates);
    costs.validate(num_candidates);
    if (static_cast<int>(tiebreak.size()) != num_candidates)
        throw std::invalid_argument("tiebreak order must list every candidate");
    std::vector<char> seen(num_candidates, 0);
    for (int c : tiebreak) {
        if (c < 0 || c >= num_candidates || seen[c]) throw std::invalid_argument("tiebreak order is not a permutation");
        seen[c] = 1;
    }
    if (supporter_threshold && (*supporter_threshold < 0 || *supporter_threshold > n))
        throw std::invalid_argument("supporter threshold out of range");
}

int Instance::initial_supporters() const {
    int count = 0;
    for (int i = 0; i < num_voters(); ++i)
        if (tops_preferred(i)) ++count;
    return count;
}

void validate_shift_vector(const Instance& instance, const ShiftVector& s) {
    if (static_cast<int>(s.size()) != instance.num_voters())
        throw std::invalid_argument("shift vector length != voter count");
    for (int v : s)
        if (v < 0 || v > instance.num_candidates - 1)
            throw std::invalid_argument("shift amount outside {0..m-1}");
}

std::vector<std::int64_t> effective_shifts(const Instance& instance, const ShiftVector& s) {
    validate_shift_vector(instance, s);
    const int n = instance.num_voters();
    std::vector<std::int64_t> eff(n);
    for (int i = 0; i < n; ++i) {
        std::int64_t total = s[i];
        for (const auto& [j, w] : instance.network.in_arcs(i)) total += w.floor_mul(s[j]);
        eff[i] = total;
    }
    return eff;
}

PreferenceProfile apply_shift(const Instance& instance, const ShiftVector& s) {
    const auto eff = effective_shifts(instance, s);
    PreferenceProfile out = instance.profile;
    for (int i = 0; i < instance.num_voters(); ++i) {
        const int pos = instance.shifts_to_top(i);
        const int move = static_cast<int>(std::min<std::int64_t>(eff[i], pos));
        if (move == 0) continue;
        auto& r = out.rankings[i];
        r.erase(r.begin() + pos);
        r.insert(r.begin() + (pos - move), instance.preferred);
    }
    return out;
}

int winner(const PreferenceProfile& profile, Rule rule, const std::vector<int>& tiebreak) {
    const int n = profile.num_voters();
    if (n == 0) throw std::invalid_argument("empty profile");
    const int m = static_cast<int>(profile.rankings[0].size());
    std::vector<int> tops(m, 0);
    for (const auto& r : profile.rankings) ++tops.at(r[0]);
    if (rule == Rule::Majority) {
        if (m != 2) throw std::invalid_argument("majority rule is defined for exactly two candidates");
        const int quota = (n + 2) / 2;
        for (int c = 0; c < m; ++c)
            if (tops[c] >= quota) return c;
        return kNoMajority;
    }
    int best = -1;
    for (int c : tiebreak)
        if (best == -1 || tops[c] > tops[best]) best = c;
    return best;
}

std::int64_t shift_cost(const Instance& instance, const ShiftVector& s) {
    validate_shift_vector(instance, s);
    std::int64_t total = 0;
    for (int i = 0; i < instance.num_voters(); ++i) total += instance.costs.per_voter[i].eval(s[i], instance.num_candidates);
    return total;
}

int count_supporters(const Instance& instance, const PreferenceProfile& profile) {
    int count = 0;
    for (const auto& r : profile.rankings)
        if (r[0] == instance.preferred) ++count;
    return count;
}

bool preferred_wins(const Instance& instance, const PreferenceProfile& shifted) {
    if (instance.supporter_threshold)
        return count_supporters(instance, shifted) >= *instance.supporter_threshold;
    if (instance.rule == Rule::Majority)
        return count_supporters(instance, shifted) >= instance.majority_quota();
    return winner(shifted, Rule::Plurality, instance.tiebreak) == instance.preferred;
}

bool verify(const Instance& instance, const ShiftVector& s) {
    if (shift_cost(instance, s) > instance.budget) return false;
    return preferred_wins(instance, apply_shift(instance, s));
}

}  // namespace sbsn

#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "sbsn/election.hpp"

namespace sbsn {

// Deterministic helper around mt19937_64; all derived draws avoid
// distribution objects so identical seeds give identical instances on every
// platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [lo, hi] via rejection sampling.
    int uniform(int lo, int hi);

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (int i = static_cast<int>(items.size()) - 1; i > 0; --i) std::swap(items[i], items[uniform(0, i)]);
    }

  private:
    std::mt19937_64 engine_;
};

struct GeneratorOptions {
    int num_voters = 5;
    int num_candidates = 2;
    Rule rule = Rule::Majority;
    CostKind cost = CostKind::Identity;
    double supporter_fraction = 0.3;
    double edge_probability = 0.3;    // general graphs only
    std::int64_t budget = -1;         // negative: derive max(1, n/3)
};

// Seed-deterministic random instances per structural class.
Instance generate_complete(const GeneratorOptions& options, std::uint64_t seed);
Instance generate_tournament(const GeneratorOptions& options, std::uint64_t seed);
Instance generate_cluster(const GeneratorOptions& options, std::uint64_t seed);
Instance generate_path(const GeneratorOptions& options, std::uint64_t seed);
Instance generate_forest(const GeneratorOptions& options, std::uint64_t seed);
Instance generate_general(const GeneratorOptions& options, std::uint64_t seed);

Instance generate_class(const std::string& cls, const GeneratorOptions& options, std::uint64_t seed);

}  // namespace sbsn

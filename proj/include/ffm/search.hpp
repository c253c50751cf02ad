#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ffm/evaluate.hpp"
#include "ffm/policy.hpp"
#include "ffm/pomdp.hpp"
#include "ffm/rng.hpp"

namespace ffm {

struct SearchResult {
    FiniteMemoryPolicy best_policy;
    double best_value = 0.0;       // always the exact value of best_policy
    std::uint64_t evaluations = 0; // exact evaluations performed by this run
    std::uint64_t iterations = 0;
    std::uint64_t seed = 0;
};

struct SaConfig {
    int initial_temperature = 95; // percent; chance of a spontaneous jump
    int decrement = 1;            // degrees lost per iteration
};

struct GaConfig {
    double crossover_rate = 0.5;
    double mutation_rate = 0.005;
    int stagnation_limit = 10;      // generations with an unchanged best
    double stdev_threshold = 1e-4;  // low-diversity cutoff, paired with limit/2
    std::optional<int> population_override;
};

/// A step in a search trajectory, for trace-equality tests.
struct TraceEvent {
    enum class Kind { init, move, jump, no_op };
    Kind kind = Kind::init;
    int cell = -1;                 // cell changed by a move/jump, -1 otherwise
    PolicyDecision decision;       // new content of that cell
    double value = 0.0;            // exact value of the current policy after the event

    bool operator==(const TraceEvent&) const = default;
};

/// Every cell drawn independently and uniformly over all action/memory pairs.
FiniteMemoryPolicy random_policy(int observations, int actions, int memory, Rng& rng);

/// Number of single-cell variants: |O| * k * (|A| * k - 1).
std::uint64_t neighbor_count(int observations, int actions, int memory);

/// The i-th neighbor in the fixed ordering: cells in o-major m-minor order,
/// candidate pairs within a cell in action-major memory-minor order, the
/// cell's current pair skipped. Exactly one cell differs from `policy`.
FiniteMemoryPolicy neighbor_at(const FiniteMemoryPolicy& policy, int actions, std::uint64_t index);

/// Randomized first improvement: from a random initial policy, repeatedly
/// scan neighbors starting at a fresh uniform offset and move to the first
/// strictly better one; stops when a full wrapped scan finds none. The
/// returned policy is a local maximum.
SearchResult local_search(const Pomdp& p, int memory, int horizon, std::uint64_t seed,
                          EvalCounter* counter = nullptr, std::vector<TraceEvent>* trace = nullptr);

/// While the temperature T is positive: with probability T/100 jump to a
/// uniformly random neighbor unconditionally, otherwise take one randomized
/// first-improvement step; T drops by cfg.decrement per iteration, floored
/// at 0. At T = 0 the search descends to a local maximum. The result tracks
/// the best policy ever evaluated, not the final one. With
/// initial_temperature = 0 the trace is identical to local_search on the
/// same seed.
SearchResult simulated_annealing(const Pomdp& p, int memory, int horizon, std::uint64_t seed,
                                 const SaConfig& cfg = {}, EvalCounter* counter = nullptr,
                                 std::vector<TraceEvent>* trace = nullptr);

/// max(30, ceil(|O| * log2(|A| * k))), or the override when given: linear in
/// observations, logarithmic in actions and memory states, floor 30.
int population_size(int observations, int actions, int memory, std::optional<int> override_size);

struct FitnessTransform {
    std::vector<double> fitness; // >= 0; 0 at discarded indices
    std::vector<int> discarded;  // ascending indices with value < mean - 2 stdev
};

/// Two-sigma outlier handling over raw policy values: values below
/// mean - 2*stdev are discarded, values above mean + 2*stdev are clamped to
/// it, and survivors are shifted by -(mean - 2*stdev) so proportional
/// selection sees nonnegative weights. Population stdev (divisor n).
/// Throws std::invalid_argument for fewer than 2 values.
FitnessTransform fitness_transform(const std::vector<double>& values);

/// Swaps every cell strictly before and strictly after `cell` between the
/// two parents; the selected cell stays with its parent.
std::pair<FiniteMemoryPolicy, FiniteMemoryPolicy>
crossover(const FiniteMemoryPolicy& parent_a, const FiniteMemoryPolicy& parent_b, int cell);

/// Reassigns one uniformly chosen cell to a uniformly chosen different
/// action/memory pair. Identity when only one pair exists.
FiniteMemoryPolicy mutate(const FiniteMemoryPolicy& policy, int actions, Rng& rng);

/// Generational GA with fitness-proportional selection, the single-cell
/// crossover above, and per-generation mutation. Stops once the same best
/// policy has led stagnation_limit consecutive generations, or half that
/// many while the population value stdev sits below stdev_threshold.
SearchResult genetic_search(const Pomdp& p, int memory, int horizon, std::uint64_t seed,
                            const GaConfig& cfg = {}, EvalCounter* counter = nullptr);

} // namespace ffm

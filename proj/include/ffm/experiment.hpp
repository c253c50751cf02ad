#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ffm/pomdp.hpp"
#include "ffm/search.hpp"

namespace ffm {

enum class Algorithm { local, anneal, genetic };

std::string_view algorithm_name(Algorithm algorithm);
std::optional<Algorithm> algorithm_from_name(std::string_view name);

/// Where the per-k optimum used for success accounting comes from.
struct OptimumSource {
    enum class Kind { branch_and_bound, enumeration, provided };
    Kind kind = Kind::branch_and_bound;
    double value = 0.0; // when provided
};

struct ExperimentSpec {
    std::string instance_id; // generator name or file stem, for reporting
    Pomdp pomdp;
    std::vector<Algorithm> algorithms;
    std::vector<int> memory_sizes; // nonempty, ascending
    int horizon = 1;
    int runs = 100;
    std::uint64_t base_seed = 0;
    OptimumSource optimum;
    SaConfig sa;
    GaConfig ga;
    std::uint64_t enumeration_limit = 2'000'000;
    /// When false every wall_ms is recorded as 0, making the full output,
    /// CSV included, byte-deterministic (timings are machine noise and are
    /// never asserted on).
    bool measure_wall_time = true;
};

struct RunRecord {
    std::string instance;
    Algorithm algorithm = Algorithm::local;
    int memory = 1;
    int horizon = 1;
    int run = 0;
    std::uint64_t seed = 0;
    double value = 0.0;
    std::uint64_t evaluations = 0;
    double wall_ms = 0.0;
    std::optional<bool> reached_optimal; // empty when no optimum was available
};

/// Aggregates for one (algorithm, memory size) cell.
struct CellStats {
    Algorithm algorithm = Algorithm::local;
    int memory = 1;
    bool optimum_known = false;
    double success_fraction = 0.0; // meaningful only when optimum_known
    double mean_evaluations = 0.0;
    double stdev_evaluations = 0.0;
    double mean_wall_ms = 0.0;
    double stdev_wall_ms = 0.0;
    double best_value = 0.0;
};

struct Report {
    std::vector<int> memory_sizes;
    std::vector<std::optional<double>> optimum_by_memory; // aligned with memory_sizes
    std::vector<CellStats> cells; // algorithm-major, memory ascending
};

struct ExperimentOutput {
    Report report;
    std::vector<RunRecord> records; // sorted by (algorithm, memory, run)
};

/// Per-run seed: base_seed XOR FNV-1a 64 of "<algorithm>:<k>:<run>", so
/// adding an algorithm or a memory size never perturbs other cells.
std::uint64_t run_seed(std::uint64_t base_seed, Algorithm algorithm, int memory, int run);

/// Runs every (algorithm, memory size, run index) cell of the spec,
/// computing the per-k optimum once up front. Tasks are independent and may
/// execute on up to `jobs` threads; the output is identical at any
/// parallelism level. If the exact method refuses a memory size and no
/// value was provided, that column's records carry an empty reached_optimal
/// and the report marks the optimum unknown.
ExperimentOutput run_experiment(const ExperimentSpec& spec, int jobs = 1);

/// Header + one row per record; values use 12 significant digits and
/// reached_optimal renders as 1, 0, or NA. Throws on empty input.
std::string emit_csv(const std::vector<RunRecord>& records);

/// One block per algorithm: a "# <name>" comment line, then rows of
/// "k success_fraction mean_evaluations", blocks separated by blank lines.
std::string emit_plot_data(const Report& report);

} // namespace ffm

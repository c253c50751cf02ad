#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ffm/policy.hpp"
#include "ffm/pomdp.hpp"

namespace ffm {

using BigInt = boost::multiprecision::cpp_int;

/// A policy table with some cells still unassigned; the branch-and-bound
/// search space. Cell order matches FiniteMemoryPolicy (o-major, m-minor).
struct PartialPolicy {
    int observation_count = 0;
    int memory_count = 0;
    std::vector<std::optional<PolicyDecision>> table;

    PartialPolicy() = default;
    PartialPolicy(int observations, int memory)
        : observation_count(observations),
          memory_count(memory),
          table(static_cast<std::size_t>(observations) * memory) {}

    int cell_count() const { return observation_count * memory_count; }
};

enum class ExactMethod { enumeration, branch_and_bound };

struct ExactResult {
    FiniteMemoryPolicy optimal_policy;
    double optimal_value = 0.0;
    std::uint64_t nodes_expanded = 0;
    ExactMethod method = ExactMethod::enumeration;
};

/// Thrown when the enumeration space exceeds the caller's limit.
class EnumerationLimitError : public std::runtime_error {
  public:
    EnumerationLimitError(BigInt size, std::uint64_t limit);
    const BigInt& space_size() const { return size_; }

  private:
    BigInt size_;
};

/// (|A| * k) ^ (|O| * k), exact.
BigInt policy_space_size(int observations, int actions, int memory);

/// Evaluates every policy in lexicographic order and returns the first one
/// attaining the maximum. Throws EnumerationLimitError when the space is
/// larger than `limit`.
ExactResult exhaustive_optimal(const Pomdp& p, int memory, int horizon,
                               std::uint64_t limit = 2'000'000);

/// Admissible upper bound on the value of every completion of `partial`:
/// backward induction that uses the assigned decision where one exists and
/// otherwise maximizes over all pairs independently per (state, memory,
/// stage). Exact on fully assigned tables.
double relaxed_upper_bound(const Pomdp& p, const PartialPolicy& partial, int horizon);

struct BnbOptions {
    /// Prune memory-relabeled duplicates: targets of the (o, m=0) cells must
    /// use new memory labels in increasing order. Positions of m=0 cells are
    /// fixed under any relabeling that keeps memory 0 initial, so every
    /// equivalence class keeps at least one representative.
    bool memory_symmetry = false;
    /// Seed of the local-search run that provides the initial incumbent.
    std::uint64_t incumbent_seed = 0;
};

/// Depth-first branch and bound over cells in the fixed lexicographic order;
/// children are explored by decreasing relaxed_upper_bound and pruned when
/// the bound is <= the incumbent value, so the first optimum found wins.
ExactResult branch_and_bound(const Pomdp& p, int memory, int horizon,
                             const BnbOptions& options = {});

} // namespace ffm

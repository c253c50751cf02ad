#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ffm {

/// One policy cell: the action to take and the memory state to move to.
struct PolicyDecision {
    int action = 0;
    int memory = 0;

    bool operator==(const PolicyDecision&) const = default;
};

/// Deterministic mapping (observation, memory) -> (action, next memory).
///
/// Cells are stored in o-major, m-minor order: cell (o, m) lives at index
/// o * memory_count + m. Execution always starts in memory state 0.
struct FiniteMemoryPolicy {
    int observation_count = 0;
    int memory_count = 0;
    std::vector<PolicyDecision> table;

    FiniteMemoryPolicy() = default;
    FiniteMemoryPolicy(int observations, int memory)
        : observation_count(observations),
          memory_count(memory),
          table(static_cast<std::size_t>(observations) * memory) {}

    int cell_count() const { return observation_count * memory_count; }

    PolicyDecision& cell(int observation, int memory) {
        return table[static_cast<std::size_t>(observation) * memory_count + memory];
    }
    const PolicyDecision& cell(int observation, int memory) const {
        return table[static_cast<std::size_t>(observation) * memory_count + memory];
    }

    bool operator==(const FiniteMemoryPolicy&) const = default;
};

/// Thrown by parse_policy on malformed input.
class PolicyFormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Text format v1: header "fmp 1 <observations> <memory>", then one line
/// "o m a m'" per cell in o-major, m-minor order.
std::string serialize_policy(const FiniteMemoryPolicy& policy);

/// Inverse of serialize_policy. Throws PolicyFormatError on bad header,
/// wrong line count, out-of-range or out-of-order cells.
FiniteMemoryPolicy parse_policy(std::string_view text);

} // namespace ffm

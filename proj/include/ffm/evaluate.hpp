#pragma once

#include <cstdint>

#include "ffm/policy.hpp"
#include "ffm/pomdp.hpp"

namespace ffm {

/// Counts exact policy evaluations. Kept per worker and summed when runs
/// execute concurrently; evaluation counts are the portable effort metric.
struct EvalCounter {
    std::uint64_t evaluations = 0;
};

/// Expected undiscounted total reward of `policy` over `horizon` steps,
/// by backward induction on the state x memory product:
///   V_0(s, m) = 0
///   V_j(s, m) = r(s, a) + sum_s' t(s, a, s') * V_{j-1}(s', m')
/// with (a, m') = policy(omega(s), m), returning sum_s b0(s) * V_H(s, 0).
/// Deterministic; cost O(H * |S|^2 * k). Increments *counter by one when
/// given. Throws std::invalid_argument on dimension mismatch or H < 0.
double evaluate_exact(const Pomdp& p, const FiniteMemoryPolicy& policy, int horizon,
                      EvalCounter* counter = nullptr);

struct SimulationEstimate {
    double mean = 0.0;
    double std_error = 0.0; // sample stdev / sqrt(episodes); 0 for 1 episode
};

/// Monte Carlo estimate of the same quantity: `episodes` seeded trajectory
/// rollouts from the start belief. Reproducible for a fixed seed; serves as
/// an independent check on evaluate_exact.
SimulationEstimate simulate(const Pomdp& p, const FiniteMemoryPolicy& policy, int horizon,
                            int episodes, std::uint64_t seed);

} // namespace ffm

#pragma once

#include <string>
#include <vector>

#include "ffm/policy.hpp"

namespace ffm {

/// A finite POMDP with deterministic per-state observations and
/// per-(state, action) rewards. Immutable by convention once built;
/// safe to share read-only across threads.
struct Pomdp {
    std::vector<std::string> state_names;
    std::vector<std::string> action_names;
    std::vector<std::string> observation_names;

    /// transition[(s * A + a) * S + s'] = P(s' | s, a)
    std::vector<double> transition;
    /// observation_of[s] = index into observation_names
    std::vector<int> observation_of;
    /// reward[s * A + a]
    std::vector<double> reward;
    /// start_belief[s], sums to 1
    std::vector<double> start_belief;
    /// Parsed and retained; evaluation is undiscounted total reward.
    double discount = 1.0;

    int state_count() const { return static_cast<int>(state_names.size()); }
    int action_count() const { return static_cast<int>(action_names.size()); }
    int observation_count() const { return static_cast<int>(observation_names.size()); }

    double trans(int s, int a, int next) const {
        return transition[(static_cast<std::size_t>(s) * action_names.size() + a) * state_names.size() + next];
    }
    double& trans(int s, int a, int next) {
        return transition[(static_cast<std::size_t>(s) * action_names.size() + a) * state_names.size() + next];
    }
    double rew(int s, int a) const {
        return reward[static_cast<std::size_t>(s) * action_names.size() + a];
    }
    double& rew(int s, int a) {
        return reward[static_cast<std::size_t>(s) * action_names.size() + a];
    }

    /// Allocates zeroed tables for the given dimensions.
    static Pomdp with_dimensions(std::vector<std::string> states,
                                 std::vector<std::string> actions,
                                 std::vector<std::string> observations);
};

/// Returns one human-readable violation per broken model invariant
/// (transition rows not summing to 1 within 1e-9, entries outside [0,1],
/// bad start belief, observation indices out of range). Empty means valid.
std::vector<std::string> validate_pomdp(const Pomdp& p);

/// The product POMDP over state x memory pairs. State (s, m) has index
/// s*k + m, observation (omega(s), m), and action (a, m') has index a*k + m'.
/// A k-memory policy on `p` becomes a stationary (1-memory) policy on the
/// product; see cross_product_policy. Throws std::invalid_argument if k < 1.
Pomdp cross_product(const Pomdp& p, int memory_states);

/// The stationary image of `policy` on cross_product(p, policy.memory_count):
/// product observation (o, m) maps to product action (a, m') with memory 0.
FiniteMemoryPolicy cross_product_policy(const FiniteMemoryPolicy& policy);

/// Canonical explicit text form of the model. parse_pomdp on the result
/// reproduces every table bit-for-bit.
std::string serialize_pomdp(const Pomdp& p);

} // namespace ffm

#include "ffm/evaluate.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ffm/rng.hpp"

namespace ffm {

namespace {

void check_dimensions(const Pomdp& p, const FiniteMemoryPolicy& policy, int horizon) {
    if (horizon < 0) throw std::invalid_argument("horizon must be >= 0");
    if (policy.memory_count < 1) throw std::invalid_argument("policy needs at least one memory state");
    if (policy.observation_count != p.observation_count())
        throw std::invalid_argument("policy and model disagree on the observation count");
    if (policy.table.size() != static_cast<std::size_t>(policy.cell_count()))
        throw std::invalid_argument("policy table has the wrong size");
    for (const PolicyDecision& d : policy.table) {
        if (d.action < 0 || d.action >= p.action_count() || d.memory < 0 || d.memory >= policy.memory_count)
            throw std::invalid_argument("policy cell references an action or memory state out of range");
    }
}

// Inverse-CDF draw; the final positive entry absorbs rounding slack.
int sample_row(const double* row, int n, double u) {
    double cumulative = 0.0;
    int last_positive = 0;
    for (int i = 0; i < n; ++i) {
        if (row[i] <= 0.0) continue;
        cumulative += row[i];
        last_positive = i;
        if (u < cumulative) return i;
    }
    return last_positive;
}

} // namespace

double evaluate_exact(const Pomdp& p, const FiniteMemoryPolicy& policy, int horizon,
                      EvalCounter* counter) {
    check_dimensions(p, policy, horizon);
    const int S = p.state_count();
    const int k = policy.memory_count;

    std::vector<double> previous(static_cast<std::size_t>(S) * k, 0.0);
    std::vector<double> current(previous.size(), 0.0);
    for (int step = 0; step < horizon; ++step) {
        for (int s = 0; s < S; ++s) {
            const int o = p.observation_of[s];
            for (int m = 0; m < k; ++m) {
                const PolicyDecision& d = policy.cell(o, m);
                double value = p.rew(s, d.action);
                for (int next = 0; next < S; ++next) {
                    const double t = p.trans(s, d.action, next);
                    if (t != 0.0) value += t * previous[static_cast<std::size_t>(next) * k + d.memory];
                }
                current[static_cast<std::size_t>(s) * k + m] = value;
            }
        }
        previous.swap(current);
    }

    double total = 0.0;
    for (int s = 0; s < S; ++s) total += p.start_belief[s] * previous[static_cast<std::size_t>(s) * k];
    if (counter) ++counter->evaluations;
    return total;
}

SimulationEstimate simulate(const Pomdp& p, const FiniteMemoryPolicy& policy, int horizon,
                            int episodes, std::uint64_t seed) {
    check_dimensions(p, policy, horizon);
    if (episodes < 1) throw std::invalid_argument("simulate needs at least one episode");

    const int S = p.state_count();
    const int A = p.action_count();
    Rng rng(seed);
    std::vector<double> totals(episodes);

    for (int e = 0; e < episodes; ++e) {
        int s = sample_row(p.start_belief.data(), S, rng.next_double());
        int m = 0;
        double total = 0.0;
        for (int step = 0; step < horizon; ++step) {
            const PolicyDecision& d = policy.cell(p.observation_of[s], m);
            total += p.rew(s, d.action);
            const double* row = p.transition.data() + (static_cast<std::size_t>(s) * A + d.action) * S;
            s = sample_row(row, S, rng.next_double());
            m = d.memory;
        }
        totals[e] = total;
    }

    // The mean of identical samples is that sample; keep that exact instead
    // of accepting summation rounding.
    bool all_equal = true;
    for (int e = 1; e < episodes; ++e)
        if (totals[e] != totals[0]) { all_equal = false; break; }

    SimulationEstimate estimate;
    if (all_equal) {
        estimate.mean = totals[0];
        estimate.std_error = 0.0;
        return estimate;
    }

    double sum = 0.0;
    for (double t : totals) sum += t;
    estimate.mean = sum / episodes;
    if (episodes > 1) {
        double squared = 0.0;
        for (double t : totals) {
            const double d = t - estimate.mean;
            squared += d * d;
        }
        const double variance = squared / (episodes - 1);
        estimate.std_error = std::sqrt(variance / episodes);
    }
    return estimate;
}

} // namespace ffm

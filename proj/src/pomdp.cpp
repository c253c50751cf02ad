#include "ffm/pomdp.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ffm {

namespace {

constexpr double kSumTolerance = 1e-9;

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

Pomdp Pomdp::with_dimensions(std::vector<std::string> states, std::vector<std::string> actions,
                             std::vector<std::string> observations) {
    Pomdp p;
    const std::size_t s = states.size(), a = actions.size();
    p.state_names = std::move(states);
    p.action_names = std::move(actions);
    p.observation_names = std::move(observations);
    p.transition.assign(s * a * s, 0.0);
    p.observation_of.assign(s, 0);
    p.reward.assign(s * a, 0.0);
    p.start_belief.assign(s, 0.0);
    return p;
}

std::vector<std::string> validate_pomdp(const Pomdp& p) {
    std::vector<std::string> violations;
    const int S = p.state_count(), A = p.action_count(), O = p.observation_count();
    char buf[160];

    if (S < 1) violations.push_back("no states");
    if (A < 1) violations.push_back("no actions");
    if (O < 1) violations.push_back("no observations");
    if (p.transition.size() != static_cast<std::size_t>(S) * A * S) violations.push_back("transition table has wrong size");
    if (p.reward.size() != static_cast<std::size_t>(S) * A) violations.push_back("reward table has wrong size");
    if (p.observation_of.size() != static_cast<std::size_t>(S)) violations.push_back("observation table has wrong size");
    if (p.start_belief.size() != static_cast<std::size_t>(S)) violations.push_back("start belief has wrong size");
    if (!violations.empty()) return violations;

    for (int s = 0; s < S; ++s) {
        for (int a = 0; a < A; ++a) {
            double sum = 0.0;
            for (int next = 0; next < S; ++next) {
                const double t = p.trans(s, a, next);
                if (t < 0.0 || t > 1.0) {
                    std::snprintf(buf, sizeof(buf), "transition probability out of [0,1] at (s=%d,a=%d,s'=%d)", s, a, next);
                    violations.push_back(buf);
                }
                sum += t;
            }
            if (std::abs(sum - 1.0) > kSumTolerance) {
                std::snprintf(buf, sizeof(buf), "transition row (s=%d,a=%d) sums to %.12g", s, a, sum);
                violations.push_back(buf);
            }
        }
    }

    double belief_sum = 0.0;
    for (int s = 0; s < S; ++s) {
        const double b = p.start_belief[s];
        if (b < 0.0 || b > 1.0) {
            std::snprintf(buf, sizeof(buf), "start belief out of [0,1] at s=%d", s);
            violations.push_back(buf);
        }
        belief_sum += b;
    }
    if (std::abs(belief_sum - 1.0) > kSumTolerance) {
        std::snprintf(buf, sizeof(buf), "start belief sums to %.12g", belief_sum);
        violations.push_back(buf);
    }

    for (int s = 0; s < S; ++s) {
        if (p.observation_of[s] < 0 || p.observation_of[s] >= O) {
            std::snprintf(buf, sizeof(buf), "observation index out of range at s=%d", s);
            violations.push_back(buf);
        }
    }

    if (!(p.discount > 0.0 && p.discount <= 1.0)) violations.push_back("discount outside (0,1]");
    return violations;
}

Pomdp cross_product(const Pomdp& p, int memory_states) {
    if (memory_states < 1) throw std::invalid_argument("cross_product: memory state count must be >= 1");
    const int S = p.state_count(), A = p.action_count(), O = p.observation_count(), k = memory_states;

    std::vector<std::string> states, actions, observations;
    states.reserve(static_cast<std::size_t>(S) * k);
    actions.reserve(static_cast<std::size_t>(A) * k);
    observations.reserve(static_cast<std::size_t>(O) * k);
    for (int s = 0; s < S; ++s)
        for (int m = 0; m < k; ++m) states.push_back(p.state_names[s] + "_m" + std::to_string(m));
    for (int a = 0; a < A; ++a)
        for (int m = 0; m < k; ++m) actions.push_back(p.action_names[a] + "_m" + std::to_string(m));
    for (int o = 0; o < O; ++o)
        for (int m = 0; m < k; ++m) observations.push_back(p.observation_names[o] + "_m" + std::to_string(m));

    Pomdp q = Pomdp::with_dimensions(std::move(states), std::move(actions), std::move(observations));
    q.discount = p.discount;

    for (int s = 0; s < S; ++s) {
        for (int m = 0; m < k; ++m) {
            const int sm = s * k + m;
            q.observation_of[sm] = p.observation_of[s] * k + m;
            q.start_belief[sm] = (m == 0) ? p.start_belief[s] : 0.0;
            for (int a = 0; a < A; ++a) {
                for (int mp = 0; mp < k; ++mp) {
                    const int amp = a * k + mp;
                    q.rew(sm, amp) = p.rew(s, a);
                    for (int next = 0; next < S; ++next)
                        q.trans(sm, amp, next * k + mp) = p.trans(s, a, next);
                }
            }
        }
    }
    return q;
}

FiniteMemoryPolicy cross_product_policy(const FiniteMemoryPolicy& policy) {
    const int k = policy.memory_count;
    FiniteMemoryPolicy flat(policy.observation_count * k, 1);
    for (int o = 0; o < policy.observation_count; ++o) {
        for (int m = 0; m < k; ++m) {
            const PolicyDecision& d = policy.cell(o, m);
            flat.cell(o * k + m, 0) = PolicyDecision{d.action * k + d.memory, 0};
        }
    }
    return flat;
}

std::string serialize_pomdp(const Pomdp& p) {
    const int S = p.state_count(), A = p.action_count();
    std::string out;
    out += "discount: " + format_full(p.discount) + "\n";
    out += "values: reward\n";

    out += "states:";
    for (const auto& n : p.state_names) out += " " + n;
    out += "\nactions:";
    for (const auto& n : p.action_names) out += " " + n;
    out += "\nobservations:";
    for (const auto& n : p.observation_names) out += " " + n;
    out += "\n";

    out += "start:";
    for (int s = 0; s < S; ++s) out += " " + format_full(p.start_belief[s]);
    out += "\n";

    for (int a = 0; a < A; ++a)
        for (int s = 0; s < S; ++s)
            for (int next = 0; next < S; ++next)
                if (p.trans(s, a, next) != 0.0)
                    out += "T: " + p.action_names[a] + " : " + p.state_names[s] + " : " + p.state_names[next] +
                           " " + format_full(p.trans(s, a, next)) + "\n";

    for (int s = 0; s < S; ++s)
        out += "O: * : " + p.state_names[s] + " : " + p.observation_names[p.observation_of[s]] + " 1\n";

    for (int a = 0; a < A; ++a)
        for (int s = 0; s < S; ++s)
            if (p.rew(s, a) != 0.0)
                out += "R: " + p.action_names[a] + " : " + p.state_names[s] + " : * : * " +
                       format_full(p.rew(s, a)) + "\n";
    return out;
}

} // namespace ffm

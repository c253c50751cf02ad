#include "ffm/search.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <stdexcept>

namespace ffm {

namespace {

struct Evaluator {
    const Pomdp& p;
    int horizon;
    EvalCounter* external;
    std::uint64_t count = 0;

    double operator()(const FiniteMemoryPolicy& policy) {
        ++count;
        return evaluate_exact(p, policy, horizon, external);
    }
};

struct BestTracker {
    FiniteMemoryPolicy policy;
    double value = 0.0;
    bool seen = false;

    void offer(const FiniteMemoryPolicy& candidate, double candidate_value) {
        if (!seen || candidate_value > value) {
            policy = candidate;
            value = candidate_value;
            seen = true;
        }
    }
};

struct NeighborRef {
    int cell;
    PolicyDecision decision;
};

NeighborRef neighbor_ref(const FiniteMemoryPolicy& policy, int actions, std::uint64_t index) {
    const int k = policy.memory_count;
    const std::uint64_t per_cell = static_cast<std::uint64_t>(actions) * k - 1;
    const int cell = static_cast<int>(index / per_cell);
    const std::uint64_t offset = index % per_cell;
    const PolicyDecision& current = policy.table[cell];
    const std::uint64_t current_pair = static_cast<std::uint64_t>(current.action) * k + current.memory;
    const std::uint64_t pair = offset < current_pair ? offset : offset + 1;
    return {cell, PolicyDecision{static_cast<int>(pair / k), static_cast<int>(pair % k)}};
}

void check_search_inputs(const Pomdp& p, int memory, int horizon) {
    if (memory < 1) throw std::invalid_argument("memory state count must be >= 1");
    if (horizon < 1) throw std::invalid_argument("search horizon must be >= 1");
    if (p.state_count() < 1 || p.action_count() < 1 || p.observation_count() < 1)
        throw std::invalid_argument("model has empty state, action, or observation set");
}

// One randomized-first-improvement step: scan neighbors from a fresh uniform
// origin, wrapping through all of them, and move to the first strictly
// better one. Every evaluated neighbor is offered to `best` when given.
bool first_improvement_step(FiniteMemoryPolicy& policy, double& value, int actions, Rng& rng,
                            Evaluator& eval, BestTracker* best, std::vector<TraceEvent>* trace) {
    const std::uint64_t n = neighbor_count(policy.observation_count, actions, policy.memory_count);
    if (n == 0) return false;
    const std::uint64_t origin = rng.next_index(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const NeighborRef ref = neighbor_ref(policy, actions, (origin + i) % n);
        const PolicyDecision saved = policy.table[ref.cell];
        policy.table[ref.cell] = ref.decision;
        const double candidate = eval(policy);
        if (best) best->offer(policy, candidate);
        if (candidate > value) {
            value = candidate;
            if (trace) trace->push_back({TraceEvent::Kind::move, ref.cell, ref.decision, value});
            return true;
        }
        policy.table[ref.cell] = saved;
    }
    return false;
}

std::vector<int> draw_distinct(int n, int count, Rng& rng) {
    std::vector<int> indices(n);
    std::iota(indices.begin(), indices.end(), 0);
    for (int i = 0; i < count; ++i) {
        const int j = i + static_cast<int>(rng.next_index(n - i));
        std::swap(indices[i], indices[j]);
    }
    indices.resize(count);
    return indices;
}

} // namespace

FiniteMemoryPolicy random_policy(int observations, int actions, int memory, Rng& rng) {
    if (observations < 1 || actions < 1 || memory < 1)
        throw std::invalid_argument("random_policy: all dimensions must be >= 1");
    FiniteMemoryPolicy policy(observations, memory);
    const std::uint64_t pairs = static_cast<std::uint64_t>(actions) * memory;
    for (auto& cell : policy.table) {
        const std::uint64_t pair = rng.next_index(pairs);
        cell = PolicyDecision{static_cast<int>(pair / memory), static_cast<int>(pair % memory)};
    }
    return policy;
}

std::uint64_t neighbor_count(int observations, int actions, int memory) {
    return static_cast<std::uint64_t>(observations) * memory *
           (static_cast<std::uint64_t>(actions) * memory - 1);
}

FiniteMemoryPolicy neighbor_at(const FiniteMemoryPolicy& policy, int actions, std::uint64_t index) {
    if (index >= neighbor_count(policy.observation_count, actions, policy.memory_count))
        throw std::out_of_range("neighbor index out of range");
    const NeighborRef ref = neighbor_ref(policy, actions, index);
    FiniteMemoryPolicy result = policy;
    result.table[ref.cell] = ref.decision;
    return result;
}

SearchResult local_search(const Pomdp& p, int memory, int horizon, std::uint64_t seed,
                          EvalCounter* counter, std::vector<TraceEvent>* trace) {
    check_search_inputs(p, memory, horizon);
    Rng rng(seed);
    Evaluator eval{p, horizon, counter};

    FiniteMemoryPolicy policy = random_policy(p.observation_count(), p.action_count(), memory, rng);
    double value = eval(policy);
    if (trace) trace->push_back({TraceEvent::Kind::init, -1, PolicyDecision{}, value});

    std::uint64_t iterations = 0;
    while (first_improvement_step(policy, value, p.action_count(), rng, eval, nullptr, trace))
        ++iterations;

    return {std::move(policy), value, eval.count, iterations, seed};
}

SearchResult simulated_annealing(const Pomdp& p, int memory, int horizon, std::uint64_t seed,
                                 const SaConfig& cfg, EvalCounter* counter,
                                 std::vector<TraceEvent>* trace) {
    check_search_inputs(p, memory, horizon);
    if (cfg.initial_temperature < 0 || cfg.initial_temperature > 100)
        throw std::invalid_argument("initial temperature must lie in [0, 100]");
    if (cfg.decrement < 1) throw std::invalid_argument("temperature decrement must be >= 1");

    Rng rng(seed);
    Evaluator eval{p, horizon, counter};
    const int A = p.action_count();
    const std::uint64_t n = neighbor_count(p.observation_count(), A, memory);

    FiniteMemoryPolicy policy = random_policy(p.observation_count(), A, memory, rng);
    double value = eval(policy);
    BestTracker best;
    best.offer(policy, value);
    if (trace) trace->push_back({TraceEvent::Kind::init, -1, PolicyDecision{}, value});

    std::uint64_t iterations = 0;
    int temperature = cfg.initial_temperature;
    while (temperature > 0) {
        ++iterations;
        const double u = rng.next_double();
        if (u * 100.0 < static_cast<double>(temperature) && n > 0) {
            // Spontaneous change: jump to a uniformly random neighbor.
            const NeighborRef ref = neighbor_ref(policy, A, rng.next_index(n));
            policy.table[ref.cell] = ref.decision;
            value = eval(policy);
            best.offer(policy, value);
            if (trace) trace->push_back({TraceEvent::Kind::jump, ref.cell, ref.decision, value});
        } else if (!first_improvement_step(policy, value, A, rng, eval, &best, trace)) {
            if (trace) trace->push_back({TraceEvent::Kind::no_op, -1, PolicyDecision{}, value});
        }
        temperature = std::max(0, temperature - cfg.decrement);
    }

    // Temperature exhausted: plain local search to a local maximum.
    while (first_improvement_step(policy, value, A, rng, eval, &best, trace))
        ++iterations;

    return {std::move(best.policy), best.value, eval.count, iterations, seed};
}

int population_size(int observations, int actions, int memory, std::optional<int> override_size) {
    if (observations < 1 || actions < 1 || memory < 1)
        throw std::invalid_argument("population_size: all dimensions must be >= 1");
    if (override_size) {
        if (*override_size < 2) throw std::invalid_argument("population override must be >= 2");
        return *override_size;
    }
    const double raw = observations * std::log2(static_cast<double>(actions) * memory);
    const int grown = static_cast<int>(std::ceil(raw - 1e-9));
    return std::max(30, grown);
}

FitnessTransform fitness_transform(const std::vector<double>& values) {
    if (values.size() < 2) throw std::invalid_argument("fitness_transform needs at least 2 values");
    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= n;
    double squared = 0.0;
    for (double v : values) squared += (v - mean) * (v - mean);
    const double stdev = std::sqrt(squared / n);
    const double low = mean - 2.0 * stdev;
    const double high = mean + 2.0 * stdev;

    FitnessTransform result;
    result.fitness.resize(values.size(), 0.0);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < low) {
            result.discarded.push_back(static_cast<int>(i));
            continue;
        }
        result.fitness[i] = std::min(values[i], high) - low;
    }
    return result;
}

std::pair<FiniteMemoryPolicy, FiniteMemoryPolicy>
crossover(const FiniteMemoryPolicy& parent_a, const FiniteMemoryPolicy& parent_b, int cell) {
    if (parent_a.observation_count != parent_b.observation_count ||
        parent_a.memory_count != parent_b.memory_count)
        throw std::invalid_argument("crossover parents must share dimensions");
    if (cell < 0 || cell >= parent_a.cell_count())
        throw std::invalid_argument("crossover cell out of range");

    FiniteMemoryPolicy child_a = parent_a;
    FiniteMemoryPolicy child_b = parent_b;
    for (int c = 0; c < parent_a.cell_count(); ++c) {
        if (c == cell) continue;
        child_a.table[c] = parent_b.table[c];
        child_b.table[c] = parent_a.table[c];
    }
    return {std::move(child_a), std::move(child_b)};
}

FiniteMemoryPolicy mutate(const FiniteMemoryPolicy& policy, int actions, Rng& rng) {
    const int k = policy.memory_count;
    const std::uint64_t pairs = static_cast<std::uint64_t>(actions) * k;
    if (pairs < 2) return policy; // no distinct pair exists

    FiniteMemoryPolicy result = policy;
    const int cell = static_cast<int>(rng.next_index(policy.cell_count()));
    const PolicyDecision& current = result.table[cell];
    const std::uint64_t current_pair = static_cast<std::uint64_t>(current.action) * k + current.memory;
    const std::uint64_t offset = rng.next_index(pairs - 1);
    const std::uint64_t pair = offset < current_pair ? offset : offset + 1;
    result.table[cell] = PolicyDecision{static_cast<int>(pair / k), static_cast<int>(pair % k)};
    return result;
}

SearchResult genetic_search(const Pomdp& p, int memory, int horizon, std::uint64_t seed,
                            const GaConfig& cfg, EvalCounter* counter) {
    check_search_inputs(p, memory, horizon);
    if (cfg.crossover_rate < 0.0 || cfg.crossover_rate > 1.0 || cfg.mutation_rate < 0.0 ||
        cfg.mutation_rate > 1.0)
        throw std::invalid_argument("genetic rates must lie in [0, 1]");
    if (cfg.stagnation_limit < 2) throw std::invalid_argument("stagnation limit must be >= 2");
    if (!(cfg.stdev_threshold > 0.0)) throw std::invalid_argument("stdev threshold must be positive");

    Rng rng(seed);
    Evaluator eval{p, horizon, counter};
    const int A = p.action_count();
    const int O = p.observation_count();
    const int population = population_size(O, A, memory, cfg.population_override);
    const int cells = O * memory;
    const std::uint64_t pairs = static_cast<std::uint64_t>(A) * memory;

    std::vector<FiniteMemoryPolicy> pool;
    pool.reserve(population);
    for (int i = 0; i < population; ++i) pool.push_back(random_policy(O, A, memory, rng));

    BestTracker best;
    FiniteMemoryPolicy previous_best;
    bool have_previous = false;
    int best_streak = 0;
    int low_var_streak = 0;
    bool warned_no_mutation = false;
    std::uint64_t generations = 0;

    for (;;) {
        ++generations;
        std::vector<double> values(population);
        for (int i = 0; i < population; ++i) {
            values[i] = eval(pool[i]);
            best.offer(pool[i], values[i]);
        }

        int generation_best = 0; // ties: lowest pool index wins
        for (int i = 1; i < population; ++i)
            if (values[i] > values[generation_best]) generation_best = i;

        double mean = 0.0;
        for (double v : values) mean += v;
        mean /= population;
        double squared = 0.0;
        for (double v : values) squared += (v - mean) * (v - mean);
        const double stdev = std::sqrt(squared / population);

        const bool same_best = have_previous && pool[generation_best] == previous_best;
        best_streak = same_best ? best_streak + 1 : 1;
        low_var_streak = stdev < cfg.stdev_threshold ? (same_best && low_var_streak > 0 ? low_var_streak + 1 : 1) : 0;
        previous_best = pool[generation_best];
        have_previous = true;

        if (best_streak >= cfg.stagnation_limit) break;
        if (low_var_streak >= (cfg.stagnation_limit + 1) / 2) break;

        // Selection: fitness-proportional with replacement over survivors.
        const FitnessTransform transform = fitness_transform(values);
        std::vector<int> candidates;
        candidates.reserve(population);
        for (int i = 0, d = 0; i < population; ++i) {
            if (d < static_cast<int>(transform.discarded.size()) && transform.discarded[d] == i) { ++d; continue; }
            candidates.push_back(i);
        }
        if (candidates.empty()) {
            std::cerr << "genetic_search: every policy fell below the discard line; "
                         "selecting from the full population\n";
            for (int i = 0; i < population; ++i) candidates.push_back(i);
        }
        double total = 0.0;
        for (int i : candidates) total += transform.fitness[i];

        std::vector<FiniteMemoryPolicy> next;
        next.reserve(population);
        if (total > 0.0) {
            std::vector<double> cumulative(candidates.size());
            double acc = 0.0;
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                acc += transform.fitness[candidates[i]];
                cumulative[i] = acc;
            }
            for (int i = 0; i < population; ++i) {
                const double u = rng.next_double() * total;
                auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
                if (it == cumulative.end()) --it;
                next.push_back(pool[candidates[it - cumulative.begin()]]);
            }
        } else {
            // All weights zero (for instance a fully uniform generation).
            for (int i = 0; i < population; ++i)
                next.push_back(pool[candidates[rng.next_index(candidates.size())]]);
        }

        // Crossover on disjoint random slot pairs.
        const int pairs_to_cross =
            std::min(static_cast<int>(std::floor(population * cfg.crossover_rate + 1e-9)), population / 2);
        if (pairs_to_cross > 0) {
            const std::vector<int> slots = draw_distinct(population, 2 * pairs_to_cross, rng);
            for (int j = 0; j < pairs_to_cross; ++j) {
                const int first = slots[2 * j], second = slots[2 * j + 1];
                const int cell = static_cast<int>(rng.next_index(cells));
                auto [child_a, child_b] = crossover(next[first], next[second], cell);
                next[first] = std::move(child_a);
                next[second] = std::move(child_b);
            }
        }

        // Mutation on distinct slots; at least one when the rate is positive.
        if (cfg.mutation_rate > 0.0) {
            if (pairs < 2) {
                if (!warned_no_mutation) {
                    std::cerr << "genetic_search: only one action/memory pair exists; mutation disabled\n";
                    warned_no_mutation = true;
                }
            } else {
                const int mutations = std::min(
                    population,
                    std::max(1, static_cast<int>(std::ceil(population * cfg.mutation_rate - 1e-9))));
                for (int slot : draw_distinct(population, mutations, rng))
                    next[slot] = mutate(next[slot], A, rng);
            }
        }

        pool = std::move(next);
    }

    return {std::move(best.policy), best.value, eval.count, generations, seed};
}

} // namespace ffm

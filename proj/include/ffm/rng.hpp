#pragma once

#include <cstdint>
#include <random>

namespace ffm {

/// Deterministic random source shared by all stochastic components.
///
/// Wraps std::mt19937_64 (whose output sequence is fixed by the standard)
/// and maps raw output to doubles and bounded integers with explicit,
/// platform-independent arithmetic. std::uniform_*_distribution is avoided
/// on purpose: its algorithm is implementation-defined, and seeded runs
/// must reproduce bit-for-bit everywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n), n >= 1. Unbiased (Lemire rejection).
    std::uint64_t next_index(std::uint64_t n) {
        std::uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        auto low = static_cast<std::uint64_t>(m);
        if (low < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (low < threshold) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * n;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace ffm

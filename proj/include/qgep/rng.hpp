#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace qgep {

/// Seeded random source with platform-independent draws.
///
/// std::uniform_*_distribution is implementation-defined, so draws are made
/// directly from the (fully specified) 64-bit Mersenne twister.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, n). n must be positive.
    std::size_t index(std::size_t n)
    {
        const std::uint64_t bound = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
        std::uint64_t draw = engine_();
        while (draw >= limit) {
            draw = engine_();
        }
        return static_cast<std::size_t>(draw % bound);
    }

    /// Uniform real in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return p > 0.0 && uniform() < p; }

private:
    std::mt19937_64 engine_;
};

} // namespace qgep

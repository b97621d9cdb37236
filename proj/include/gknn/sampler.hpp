#pragma once

#include <cstdint>

namespace gknn {

// SplitMix64 finalizer, used as the avalanche stage of the counter stream.
inline std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic counter-based uniform stream. Every (seed, run_index, t, draw)
// tuple maps to exactly one variate, so parallel runs and parallel time steps
// reproduce bit-identically regardless of execution order. Time steps t are
// 1-based throughout the engine.
struct SeededSampler {
    std::uint64_t seed = 0;
    std::uint64_t run_index = 0;

    // Uniform double in [0, 1) with 53 random bits.
    double uniform(std::uint64_t t, std::uint64_t draw = 0) const noexcept {
        std::uint64_t h = mix64(seed);
        h = mix64(h ^ run_index);
        h = mix64(h ^ t);
        h = mix64(h ^ draw);
        return static_cast<double>(h >> 11) * 0x1.0p-53;
    }
};

} // namespace gknn

#pragma once

#include <cstdint>
#include <random>

// Deterministic uniform draws built directly from mt19937_64 output.
// std::uniform_*_distribution is implementation-defined, so fixed seeds
// would not pin byte-identical results across standard libraries.

namespace tcirc {

/// Uniform double in [0, 1).
inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * uniform01(gen);
}

/// Uniform integer in [lo, hi].
inline int uniform_int(std::mt19937_64& gen, int lo, int hi) {
    return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace tcirc

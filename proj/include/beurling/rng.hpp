#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace beurling {

// Deterministic helpers on top of mt19937_64. The standard distributions are
// implementation-defined, so uniform/gaussian draws are derived from raw bits
// to keep outputs reproducible for a fixed seed.

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double gaussian(std::mt19937_64& rng) {
    // Box-Muller; discards the second variate.
    double u1 = uniform01(rng);
    double u2 = uniform01(rng);
    while (u1 <= 0.0) u1 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

inline std::vector<double> gaussian_vector(std::mt19937_64& rng, std::size_t n) {
    std::vector<double> v(n);
    for (auto& x : v) x = gaussian(rng);
    return v;
}

} // namespace beurling

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace simdiag {

/// Counter-based deterministic randomness: every draw is a pure function of
/// the key words, so generation order and parallel layout never change the
/// sampled values, and the same seed reproduces the same stream on any
/// platform.
namespace rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t hash(std::uint64_t seed, std::uint64_t tag, std::uint64_t a = 0,
                          std::uint64_t b = 0, std::uint64_t c = 0, std::uint64_t d = 0) {
    std::uint64_t h = splitmix64(seed ^ 0x243f6a8885a308d3ull);
    h = splitmix64(h ^ tag);
    h = splitmix64(h ^ a);
    h = splitmix64(h ^ b);
    h = splitmix64(h ^ c);
    h = splitmix64(h ^ d);
    return h;
}

/// Uniform in [0, 1), 53-bit resolution.
inline double uniform01(std::uint64_t word) {
    return static_cast<double>(word >> 11) * 0x1.0p-53;
}

/// Uniform in (-1, 1).
inline double uniform_pm1(std::uint64_t word) {
    return 2.0 * uniform01(word) - 1.0;
}

/// Standard normal via Box-Muller on two derived words.
inline double gaussian(std::uint64_t word) {
    const double u1 = uniform01(splitmix64(word ^ 0x5bf0a8dcull));
    const double u2 = uniform01(splitmix64(word ^ 0x94d0ca12ull));
    const double r = std::sqrt(-2.0 * std::log1p(-u1));  // u1 < 1 keeps log finite
    return r * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace rng
}  // namespace simdiag

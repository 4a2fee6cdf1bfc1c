#pragma once

#include <cstdint>
#include <random>

namespace singular {

// All randomized code draws through these two helpers. std::mt19937_64 has a
// pinned algorithm, and the explicit 53-bit mapping below avoids
// std::uniform_real_distribution, whose output is implementation defined.
// Same seed, same platform-independent stream.
inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

inline double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace singular

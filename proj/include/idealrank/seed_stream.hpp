#pragma once

#include <cstdint>

namespace idealrank {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    std::uint64_t z = x + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based stream: the draw for (seed, trial, cell) does not depend on
// how trials are scheduled, so serial and parallel runs agree bit for bit.
constexpr std::uint64_t cell_draw(std::uint64_t seed, std::uint64_t trial, std::uint64_t cell) {
    return splitmix64(splitmix64(splitmix64(seed) ^ trial) ^ cell);
}

// Uniform integer in [-magnitude, magnitude].
constexpr int cell_jitter(std::uint64_t seed, std::uint64_t trial, std::uint64_t cell, int magnitude) {
    if (magnitude <= 0) return 0;
    const auto span = static_cast<std::uint64_t>(2 * magnitude + 1);
    return static_cast<int>(cell_draw(seed, trial, cell) % span) - magnitude;
}

}  // namespace idealrank

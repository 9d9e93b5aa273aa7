#pragma once

#include <cstdint>

namespace freecert {

/// SplitMix64. Chosen over <random> engines because the byte-for-byte
/// output sequence is pinned here, independent of standard-library
/// distribution implementations. The generator is an explicit value that
/// callers own and pass around; there is no hidden global state.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound) by modular reduction; the tiny bias is
    /// irrelevant here (bounds are single digits) and determinism matters.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace freecert

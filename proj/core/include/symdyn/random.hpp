#ifndef SYMDYN_RANDOM_HPP
#define SYMDYN_RANDOM_HPP

#include <cstdint>

#include "symdyn/dynsys.hpp"

namespace symdyn {

/// SplitMix64. Self-contained so that seeded runs produce identical streams
/// on every platform and standard library.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d49bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n); n must be positive. The modulo bias is far below
    /// anything observable at the ranges used here.
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

/// Uniformly random total map on states "0" .. "k-1".
FiniteDynSys random_system(std::size_t state_count, SplitMix64& rng);

} // namespace symdyn

#endif // SYMDYN_RANDOM_HPP

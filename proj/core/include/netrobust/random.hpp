#pragma once

#include <cstdint>
#include <random>

namespace netrobust {

/// SplitMix64 finalizer; used to derive independent seeds from (seed, counter) pairs.
constexpr std::uint64_t mixSeed(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for stream `index` under `master`. Pure function, so any stream can be
/// regenerated in isolation.
constexpr std::uint64_t deriveSeed(std::uint64_t master, std::uint64_t index) noexcept {
    return mixSeed(mixSeed(master) ^ mixSeed(index + 0x632be59bd9b4e019ULL));
}

/// Uniform double in [0, 1) from the top 53 bits. std::uniform_real_distribution
/// is implementation-defined, which would break cross-platform reproducibility.
inline double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace netrobust

#pragma once

#include <cstdint>
#include <random>

namespace facetcx {

// The standard distributions are implementation-defined, so seeded output
// would differ between standard libraries. These draw straight from the
// engine, whose sequence is fixed by the standard.

using Rng = std::mt19937_64;

inline auto uniform01(Rng & rng) -> double
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline auto below(Rng & rng, std::uint64_t n) -> std::uint64_t
{
    if (n <= 1)
        return 0;
    // rejection sampling keeps the draw unbiased
    auto limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do
        x = rng();
    while (x >= limit);
    return x % n;
}

inline auto between(Rng & rng, std::uint64_t lo, std::uint64_t hi) -> std::uint64_t
{
    return lo + below(rng, hi - lo + 1);
}

inline auto chance(Rng & rng, double p) -> bool
{
    return p >= 1.0 || uniform01(rng) < p;
}

/// Derives an independent stream for one trial of a seeded experiment.
inline auto split_seed(std::uint64_t seed, std::uint64_t index) -> std::uint64_t
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace facetcx

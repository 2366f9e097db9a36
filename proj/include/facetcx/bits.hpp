#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace facetcx {

/// A set of vertex indices (or facet indices) packed into 64 bits.
using Mask = std::uint64_t;

inline constexpr std::size_t max_vertices = 64;

constexpr auto bit(std::size_t i) -> Mask { return Mask{1} << i; }

constexpr auto popcount(Mask m) -> std::size_t { return static_cast<std::size_t>(std::popcount(m)); }

constexpr auto lowest(Mask m) -> std::size_t { return static_cast<std::size_t>(std::countr_zero(m)); }

constexpr auto is_subset(Mask a, Mask b) -> bool { return (a & ~b) == 0; }

constexpr auto low_bits(std::size_t n) -> Mask { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

template <typename F>
constexpr void for_each_bit(Mask m, F && f)
{
    while (m) {
        f(lowest(m));
        m &= m - 1;
    }
}

inline auto bits_of(Mask m) -> std::vector<std::size_t>
{
    std::vector<std::size_t> out;
    out.reserve(popcount(m));
    for_each_bit(m, [&](std::size_t i) { out.push_back(i); });
    return out;
}

/// Lexicographic order on the ascending index sequences encoded by two masks.
constexpr auto lex_less(Mask a, Mask b) -> bool
{
    while (a && b) {
        auto ia = lowest(a), ib = lowest(b);
        if (ia != ib)
            return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

/// Calls f on every subset of `m` with exactly k elements, in lexicographic order.
template <typename F>
void for_each_k_subset(Mask m, std::size_t k, F && f)
{
    auto idx = bits_of(m);
    if (k > idx.size())
        return;
    if (k == 0) {
        f(Mask{0});
        return;
    }
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i)
        pick[i] = i;
    while (true) {
        Mask s = 0;
        for (auto p : pick)
            s |= bit(idx[p]);
        f(s);
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == idx.size() - k + (i - 1))
            --i;
        if (i == 0)
            return;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

} // namespace facetcx

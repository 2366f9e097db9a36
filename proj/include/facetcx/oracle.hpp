#pragma once

// Brute-force reference implementations. They evaluate the definitions
// directly and share nothing with the solvers except classify().

#include <facetcx/complexity.hpp>
#include <facetcx/maps.hpp>

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace facetcx::oracle {

struct OracleLimits {
    std::size_t max_source_vertices = 5;
    std::size_t max_target_vertices = 4;
    std::size_t max_facets = 4;
    /// Arbitrary subcomplex covers are enumerated only up to this many simplices.
    std::size_t max_simplices = 12;
};

struct MapSearch {
    bool found = false;
    std::optional<VertexMap> map;
};

inline void check_limits(const Complex & source, const Complex & target, const OracleLimits & lim)
{
    if (source.vertex_count() > lim.max_source_vertices)
        throw Error("oracle: source has " + std::to_string(source.vertex_count()) + " vertices, limit is " +
            std::to_string(lim.max_source_vertices));
    if (target.vertex_count() > lim.max_target_vertices)
        throw Error("oracle: target has " + std::to_string(target.vertex_count()) + " vertices, limit is " +
            std::to_string(lim.max_target_vertices));
}

inline auto matches(const MapClass & k, MapKind kind, bool injective) -> bool
{
    bool ok = kind == MapKind::facet ? k.facet : k.strict;
    return ok && (! injective || k.injective);
}

namespace detail {

    /// Every assignment in lexicographic order (vertex 0 most significant); stops when f returns true.
    template <class F>
    auto for_each_assignment(std::size_t n, std::size_t m, F && f) -> bool
    {
        std::vector<std::size_t> a(n, 0);
        if (n > 0 && m == 0)
            return false;
        while (true) {
            if (f(a))
                return true;
            std::size_t i = n;
            while (i > 0 && a[i - 1] + 1 == m)
                a[--i] = 0;
            if (i == 0)
                return false;
            ++a[i - 1];
        }
    }

    inline auto search(const Complex & source, const Complex & target, MapKind kind, bool injective) -> MapSearch
    {
        MapSearch out;
        for_each_assignment(source.vertex_count(), target.vertex_count(), [&](const std::vector<std::size_t> & a) {
            if (! matches(classify(source, target, a), kind, injective))
                return false;
            out.found = true;
            out.map = VertexMap{source, target, a};
            return true;
        });
        return out;
    }

} // namespace detail

/// Tries all |V(target)|^|V(source)| assignments; returns the lexicographically least match.
inline auto brute_force_map_search(const Complex & source, const Complex & target, MapKind kind, bool injective,
    const OracleLimits & lim = {}) -> MapSearch
{
    check_limits(source, target, lim);
    return detail::search(source, target, kind, injective);
}

struct CoverOracle {
    /// Least k over assignments of all facets to k groups.
    Value canonical = Value::infinity();
    /// Least k over arbitrary subcomplex covers; absent above the simplex cap.
    std::optional<Value> arbitrary;
};

namespace detail {

    /// Subcomplex spanned by some simplices of c, on the vertices they use.
    inline auto sub_complex(const Complex & c, const std::vector<Mask> & simplices) -> Complex
    {
        Mask span = 0;
        for (auto s : simplices)
            span |= s;
        std::vector<std::string> labels;
        std::vector<std::size_t> local(c.vertex_count(), 0);
        for_each_bit(span, [&](std::size_t i) {
            local[i] = labels.size();
            labels.push_back(c.label(i));
        });
        std::vector<Mask> faces;
        for (auto s : simplices) {
            Mask m = 0;
            for_each_bit(s, [&](std::size_t i) { m |= bit(local[i]); });
            faces.push_back(m);
        }
        return Complex::from_masks(std::move(labels), std::move(faces));
    }

    inline auto all_simplices(const Complex & c) -> std::vector<Mask>
    {
        std::set<Mask> s;
        for (auto f : c.facets())
            for (Mask x = f; x; x = (x - 1) & f)
                s.insert(x);
        return {s.begin(), s.end()};
    }

} // namespace detail

/**
 * C, IC, C_s or IC_s by direct enumeration. The canonical count assigns every
 * facet to one of k groups; the arbitrary count searches all covers by
 * downward-closed simplex sets and exists to validate the canonical one.
 */
inline auto brute_force_cover_complexity(const ComplexityQuery & q, const OracleLimits & lim = {}) -> CoverOracle
{
    check_limits(q.source, q.target, lim);
    if (q.source.facet_count() > lim.max_facets)
        throw Error("oracle: source has " + std::to_string(q.source.facet_count()) + " facets, limit is " +
            std::to_string(lim.max_facets));
    CoverOracle out;
    const auto & src = q.source;
    auto eta = src.facet_count();
    if (eta == 0) {
        out.canonical = Value::finite(1);
        out.arbitrary = Value::finite(1);
        return out;
    }

    std::map<std::vector<Mask>, bool> memo;
    auto feasible = [&](std::vector<Mask> simplices) {
        std::sort(simplices.begin(), simplices.end());
        if (auto it = memo.find(simplices); it != memo.end())
            return it->second;
        bool ok = simplices.empty() || detail::search(detail::sub_complex(src, simplices), q.target, q.kind, q.injective).found;
        memo.emplace(simplices, ok);
        return ok;
    };

    auto facets = std::vector<Mask>(src.facets().begin(), src.facets().end());
    for (std::size_t k = 1; k <= eta && out.canonical.is_infinite(); ++k) {
        detail::for_each_assignment(eta, k, [&](const std::vector<std::size_t> & a) {
            for (std::size_t g = 0; g < k; ++g) {
                std::vector<Mask> members;
                for (std::size_t i = 0; i < eta; ++i)
                    if (a[i] == g)
                        members.push_back(facets[i]);
                if (! feasible(members))
                    return false;
            }
            out.canonical = Value::finite(k);
            return true;
        });
    }

    auto simplices = detail::all_simplices(src);
    if (simplices.size() <= lim.max_simplices) {
        auto n = simplices.size();
        // downward-closed simplex sets, as bitmasks over `simplices`
        std::vector<Mask> feasible_subs;
        for (Mask sel = 1; sel < (Mask{1} << n); ++sel) {
            bool closed = true;
            std::vector<Mask> chosen;
            for_each_bit(sel, [&](std::size_t i) { chosen.push_back(simplices[i]); });
            for (auto s : chosen)
                for (std::size_t j = 0; j < n && closed; ++j)
                    if (is_subset(simplices[j], s) && ! (sel & bit(j)))
                        closed = false;
            if (closed && feasible(chosen))
                feasible_subs.push_back(sel);
        }
        Mask full = low_bits(n);
        std::set<Mask> level{0};
        out.arbitrary = Value::infinity();
        for (std::size_t k = 1; k <= eta && ! level.empty(); ++k) {
            std::set<Mask> next;
            for (auto u : level)
                for (auto s : feasible_subs)
                    if ((u | s) != u)
                        next.insert(u | s);
            if (next.count(full)) {
                out.arbitrary = Value::finite(k);
                break;
            }
            level = std::move(next);
        }
    }
    return out;
}

/// Least k with a k-colouring leaving no non-unitary facet monochromatic, by enumeration.
inline auto brute_force_chromatic(const Complex & c) -> std::size_t
{
    if (c.vertex_count() > 8)
        throw Error("oracle: chromatic enumeration is limited to 8 vertices");
    auto n = c.vertex_count();
    if (n == 0)
        return 0;
    for (std::size_t k = 1;; ++k) {
        bool ok = detail::for_each_assignment(n, k, [&](const std::vector<std::size_t> & a) {
            for (auto f : c.facets()) {
                if (popcount(f) < 2)
                    continue;
                std::set<std::size_t> colours;
                for_each_bit(f, [&](std::size_t v) { colours.insert(a[v]); });
                if (colours.size() == 1)
                    return false;
            }
            return true;
        });
        if (ok)
            return k;
    }
}

} // namespace facetcx::oracle

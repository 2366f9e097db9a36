#pragma once

#include <facetcx/coloring.hpp>
#include <facetcx/complex.hpp>
#include <facetcx/homsearch.hpp>
#include <facetcx/maps.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace facetcx {

/// A complexity value: a positive integer, infinity, or undecided (search budget ran out).
class Value {
public:
    enum class Kind { finite, infinity, undecided };

    static auto finite(std::size_t n) -> Value { return Value(Kind::finite, n); }
    static auto infinity() -> Value { return Value(Kind::infinity, 0); }
    static auto undecided() -> Value { return Value(Kind::undecided, 0); }

    auto kind() const -> Kind { return kind_; }
    auto is_finite() const -> bool { return kind_ == Kind::finite; }
    auto is_infinite() const -> bool { return kind_ == Kind::infinity; }
    auto is_undecided() const -> bool { return kind_ == Kind::undecided; }

    auto get() const -> std::size_t
    {
        if (! is_finite())
            throw Error("value is " + to_string() + ", not a number");
        return n_;
    }

    auto to_string() const -> std::string
    {
        switch (kind_) {
        case Kind::finite: return std::to_string(n_);
        case Kind::infinity: return "infinity";
        default: return "undecided";
        }
    }

    /// Order on decided values with infinity on top; undecided compares false.
    auto le(const Value & o) const -> bool
    {
        if (is_undecided() || o.is_undecided())
            return false;
        if (o.is_infinite())
            return true;
        return is_finite() && n_ <= o.n_;
    }

    friend auto operator==(const Value &, const Value &) -> bool = default;

private:
    Value(Kind k, std::size_t n) : kind_(k), n_(n) {}
    Kind kind_;
    std::size_t n_;
};

inline auto max_value(const Value & a, const Value & b) -> Value
{
    if (a.is_undecided() || b.is_undecided())
        return Value::undecided();
    return a.le(b) ? b : a;
}

struct ComplexityQuery {
    Complex source;
    Complex target;
    MapKind kind = MapKind::facet;
    bool injective = false;
};

inline auto query_name(const ComplexityQuery & q) -> std::string
{
    std::string s = q.injective ? "I" : "";
    s += "C";
    if (q.kind == MapKind::strict)
        s += "_s";
    return s;
}

/// One cover member: a group of source facets and a map on its closure.
struct CoverGroup {
    Mask group = 0; // bits over source facet indices
    VertexMap map;
};

struct Cover {
    std::vector<CoverGroup> groups;

    auto value() const -> std::size_t { return groups.size(); }
};

struct ComputeOptions {
    std::size_t facet_cap = 20;
    SearchLimits limits{};
};

struct ComplexityResult {
    Value value = Value::undecided();
    std::optional<Cover> cover;
    std::uint64_t probes = 0;
};

/// Facets every cover must reach: isolated vertices matter only when they
/// use up target vertices (injective) or for strict maps.
inline auto required_facets(const ComplexityQuery & q) -> Mask
{
    Mask r = 0;
    auto fs = q.source.facets();
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (q.kind == MapKind::strict || q.injective || popcount(fs[i]) >= 2)
            r |= bit(i);
    return r;
}

namespace detail {

    /// Minimum cover of `required` (facet indices) by feasible groups. Groups
    /// are hereditary, so from each state only maximal feasible groups through
    /// the lowest uncovered facet need to be tried.
    class CoverSolver {
    public:
        CoverSolver(GroupFeasibility & feasible, std::vector<std::size_t> required) :
            feasible_(feasible),
            required_(std::move(required))
        {}

        /// Returns the minimum and the chosen groups (as facet-index masks).
        auto solve() -> std::pair<std::size_t, std::vector<Mask>>
        {
            Mask all = low_bits(required_.size());
            best(all);
            std::vector<Mask> groups;
            for (Mask u = all; u;) {
                auto s = memo_.at(u).second;
                groups.push_back(to_facets(s));
                u &= ~s;
            }
            return {memo_.at(all).first, groups};
        }

    private:
        auto to_facets(Mask local) const -> Mask
        {
            Mask g = 0;
            for_each_bit(local, [&](std::size_t i) { g |= bit(required_[i]); });
            return g;
        }

        auto ok(Mask local) -> bool { return feasible_(to_facets(local)); }

        auto best(Mask u) -> std::size_t
        {
            if (u == 0)
                return 0;
            if (auto it = memo_.find(u); it != memo_.end())
                return it->second.first;
            if (ok(u)) {
                memo_[u] = {1, u};
                return 1;
            }
            auto pivot = bit(lowest(u));
            // all feasible groups through the pivot inside u, grown in index order
            std::vector<Mask> feasible_sets;
            auto grow = [&](auto & self, Mask s, Mask rest) -> void {
                feasible_sets.push_back(s);
                for (Mask r = rest; r; r &= r - 1) {
                    auto b = r & (~r + 1);
                    auto t = s | b;
                    Mask later = rest & ~((b << 1) - 1);
                    if (ok(t))
                        self(self, t, later);
                }
            };
            grow(grow, pivot, u & ~pivot);
            std::vector<Mask> maximal;
            for (auto s : feasible_sets) {
                bool dominated = std::any_of(feasible_sets.begin(), feasible_sets.end(),
                    [&](Mask t) { return t != s && is_subset(s, t); });
                if (! dominated)
                    maximal.push_back(s);
            }
            std::sort(maximal.begin(), maximal.end());
            std::size_t top = std::numeric_limits<std::size_t>::max();
            Mask choice = 0;
            for (auto s : maximal) {
                auto v = 1 + best(u & ~s);
                if (v < top) {
                    top = v;
                    choice = s;
                    if (top == 2)
                        break; // u itself is infeasible, so 2 is optimal
                }
            }
            memo_[u] = {top, choice};
            return top;
        }

        GroupFeasibility & feasible_;
        std::vector<std::size_t> required_;
        std::unordered_map<Mask, std::pair<std::size_t, Mask>> memo_;
    };

} // namespace detail

/**
 * Exact C, IC, C_s or IC_s with an optimal certificate cover.
 *
 * Any cover by subcomplexes can be replaced by the closures of the source
 * facets each member contains (restricting the member's map), so it is enough
 * to cover the facet set by groups whose closures admit a map.
 */
inline auto compute(const ComplexityQuery & q, const ComputeOptions & opt = {}) -> ComplexityResult
{
    ComplexityResult r;
    const auto & src = q.source;
    if (src.empty()) {
        Cover c;
        c.groups.push_back({0, VertexMap{closure(src, {}), q.target, {}}});
        r.value = Value::finite(1);
        r.cover = std::move(c);
        return r;
    }
    if (q.target.empty()) {
        r.value = Value::infinity();
        return r;
    }
    auto required = required_facets(q);
    if (popcount(required) > opt.facet_cap)
        throw Error("source has " + std::to_string(popcount(required)) + " facets to cover, above the cap of " +
            std::to_string(opt.facet_cap) + "; use bounds-only mode or raise the cap");

    GroupFeasibility feasible(src, q.target, q.kind, q.injective, opt.limits);
    try {
        bool infinite = false;
        for_each_bit(required, [&](std::size_t i) { infinite = infinite || ! feasible(bit(i)); });
        if (infinite) {
            r.value = Value::infinity();
            r.probes = feasible.probes();
            return r;
        }
        std::vector<Mask> groups;
        std::size_t value = 1;
        if (required == 0)
            groups.push_back(0);
        else {
            auto [v, gs] = detail::CoverSolver(feasible, bits_of(required)).solve();
            value = v;
            groups = std::move(gs);
        }
        // unitary facets outside the required set ride along with the first group
        groups.front() |= low_bits(src.facet_count()) & ~required;
        Cover c;
        for (auto g : groups) {
            auto m = feasible.certificate(g);
            if (! m)
                throw Error("internal: feasible group lost its certificate");
            c.groups.push_back({g, std::move(*m)});
        }
        r.value = Value::finite(value);
        r.cover = std::move(c);
    }
    catch (const Undecided &) {
        r.value = Value::undecided();
        r.cover.reset();
    }
    r.probes = feasible.probes();
    return r;
}

/// Checks a certificate: members cover the required facets and each map
/// classifies with the query's kind and injectivity on the member's closure.
inline auto verify_cover(const ComplexityQuery & q, const Cover & c) -> bool
{
    if (c.groups.empty())
        return false;
    Mask covered = 0;
    for (const auto & g : c.groups) {
        if (g.group & ~low_bits(q.source.facet_count()))
            return false;
        covered |= g.group;
        auto part = closure_of_group(q.source, g.group);
        if (! (g.map.source == part) || ! (g.map.target == q.target))
            return false;
        auto k = classify(g.map);
        if (q.kind == MapKind::facet ? ! k.facet : ! k.strict)
            return false;
        if (q.injective && ! k.injective)
            return false;
    }
    return is_subset(required_facets(q), covered);
}

// ---------------------------------------------------------------------------
// Bounds

struct BoundReport {
    /// Least m with chi(K)^m >= chi(L) (graph chromatic numbers for strict queries); absent when chi(K) < 2.
    std::optional<std::size_t> chromatic_lower;
    /// C(G_L;G_K) on the facet graphs; facet queries whose target has no isolated vertex.
    std::optional<Value> graph_lower;
    Value eta_upper = Value::infinity();
    bool finite = false;
    /// eta(L) for a complete target of matching dimension and a pure source.
    std::optional<std::size_t> complete_target_ic;
    std::optional<Value> exact;
};

/// Least m >= 1 with base^m >= x.
inline auto log_ceiling(std::size_t base, std::size_t x) -> std::size_t
{
    std::size_t m = 1, p = base;
    while (p < x) {
        p *= base;
        ++m;
    }
    return m;
}

/// Finiteness decided without search. For facet maps the smallest
/// non-unitary target facet decides everything: a non-unitary source facet
/// can be mapped onto it exactly when it is at least as large.
inline auto finiteness(const ComplexityQuery & q) -> bool
{
    const auto & s = q.source;
    const auto & t = q.target;
    if (s.empty())
        return true;
    if (t.empty())
        return false;
    auto tm = metrics(t);
    for (auto f : s.facets()) {
        auto n = popcount(f);
        if (q.kind == MapKind::strict) {
            bool fits = std::any_of(t.facets().begin(), t.facets().end(), [&](Mask g) { return popcount(g) >= n; });
            if (! fits)
                return false;
        }
        else if (n >= 2) {
            if (! tm.min_nonunitary_facet_size)
                return false;
            if (q.injective) {
                bool same = std::any_of(t.facets().begin(), t.facets().end(), [&](Mask g) { return popcount(g) == n; });
                if (! same)
                    return false;
            }
            else if (n < *tm.min_nonunitary_facet_size)
                return false;
        }
    }
    return true;
}

inline auto bounds(const ComplexityQuery & q, const ComputeOptions & opt = {}) -> BoundReport
{
    BoundReport b;
    const auto & s = q.source;
    const auto & t = q.target;

    if (q.kind == MapKind::facet) {
        auto ks = chromatic_number(t).value;
        if (ks >= 2)
            b.chromatic_lower = log_ceiling(ks, chromatic_number(s).value);
        if (t.isolated() == 0) {
            auto gl = graph_as_complex(facet_graph(s), "G_L");
            auto gk = graph_as_complex(facet_graph(t), "G_K");
            ComplexityQuery gq{gl, gk, MapKind::facet, false};
            if (popcount(required_facets(gq)) <= opt.facet_cap)
                b.graph_lower = compute(gq, opt).value;
        }
    }
    else {
        auto ks = strict_chromatic_number(t).value;
        if (ks >= 2)
            b.chromatic_lower = log_ceiling(ks, strict_chromatic_number(s).value);
    }

    b.finite = finiteness(q);
    if (b.finite)
        b.eta_upper = Value::finite(std::max<std::size_t>(1, s.facet_count()));

    auto sm = metrics(s);
    auto tm = metrics(t);
    bool complete = t.facet_count() == 1 && t.facets()[0] == t.all() && t.vertex_count() >= 2;
    if (complete && sm.pure && sm.dim == tm.dim)
        b.complete_target_ic = s.facet_count();
    return b;
}

/**
 * C of a disjoint union as the largest C over its connected components.
 * Only defined for non-injective facet queries.
 */
inline auto disjoint_decompose(const ComplexityQuery & q, const ComputeOptions & opt = {}) -> Value
{
    if (q.kind != MapKind::facet || q.injective)
        throw Error("disjoint decomposition applies to non-injective facet complexity only");
    auto comps = facet_components(q.source);
    if (comps.empty())
        return compute(q, opt).value;
    auto v = Value::finite(1);
    for (auto span : comps) {
        auto part = component(q.source, span);
        v = max_value(v, compute(ComplexityQuery{part, q.target, q.kind, q.injective}, opt).value);
    }
    return v;
}

} // namespace facetcx

#pragma once

#include <facetcx/complex.hpp>
#include <facetcx/maps.hpp>

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace facetcx {

/// Colours 1..k on a labelled vertex list (a complex's or a graph's).
struct Coloring {
    std::vector<std::string> vertices;
    std::vector<std::size_t> color;
    std::size_t k = 0;
    bool surjective = false;

    auto color_of(const std::string & v) const -> std::size_t
    {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
        if (it == vertices.end() || *it != v)
            throw Error("vertex '" + v + "' is not coloured");
        return color[static_cast<std::size_t>(it - vertices.begin())];
    }

    friend auto operator==(const Coloring &, const Coloring &) -> bool = default;
};

struct ChromaticResult {
    std::size_t value = 0;
    Coloring witness;
};

namespace detail {

    inline auto make_coloring(std::vector<std::string> vertices, std::vector<std::size_t> color, std::size_t k) -> Coloring
    {
        std::vector<bool> used(k + 1, false);
        for (auto c : color)
            if (c >= 1 && c <= k)
                used[c] = true;
        bool surjective = std::all_of(used.begin() + 1, used.end(), [](bool b) { return b; });
        return Coloring{std::move(vertices), std::move(color), k, surjective};
    }

    inline auto monochromatic(Mask edge, const std::vector<std::size_t> & color) -> bool
    {
        auto first = color[lowest(edge)];
        bool mono = true;
        for_each_bit(edge, [&](std::size_t i) { mono = mono && color[i] == first; });
        return mono;
    }

    /// Greedy clique among the 2-element edges; a lower bound on any weak colouring.
    inline auto clique_bound(std::size_t n, const std::vector<Mask> & edges) -> std::size_t
    {
        std::vector<Mask> adj(n, 0);
        for (auto e : edges)
            if (popcount(e) == 2) {
                auto a = lowest(e), b = lowest(e & (e - 1));
                adj[a] |= bit(b);
                adj[b] |= bit(a);
            }
        std::size_t best = n > 0 ? 1 : 0;
        for (std::size_t v = 0; v < n; ++v) {
            Mask clique = bit(v), cand = adj[v];
            while (cand) {
                auto u = lowest(cand);
                clique |= bit(u);
                cand &= adj[u];
            }
            best = std::max(best, popcount(clique));
        }
        return best;
    }

    /// Least k with a colouring of 0..n-1 leaving no edge monochromatic; the
    /// witness is the lexicographically least such colouring in which colour
    /// j+1 never appears before colour j.
    inline auto weak_coloring(std::size_t n, const std::vector<Mask> & edges) -> std::pair<std::size_t, std::vector<std::size_t>>
    {
        if (n == 0)
            return {0, {}};
        bool any = std::any_of(edges.begin(), edges.end(), [](Mask e) { return popcount(e) >= 2; });
        if (! any)
            return {1, std::vector<std::size_t>(n, 1)};

        // edges checked once their highest vertex is coloured
        std::vector<std::vector<Mask>> closing(n);
        for (auto e : edges)
            if (popcount(e) >= 2)
                closing[static_cast<std::size_t>(63 - std::countl_zero(e))].push_back(e);

        std::vector<std::size_t> color(n, 0);
        for (auto k = std::max<std::size_t>(2, clique_bound(n, edges));; ++k) {
            auto dfs = [&](auto & self, std::size_t v, std::size_t used) -> bool {
                if (v == n)
                    return true;
                for (std::size_t c = 1; c <= std::min(k, used + 1); ++c) {
                    color[v] = c;
                    bool ok = std::none_of(closing[v].begin(), closing[v].end(),
                        [&](Mask e) { return monochromatic(e, color); });
                    if (ok && self(self, v + 1, std::max(used, c)))
                        return true;
                }
                color[v] = 0;
                return false;
            };
            if (dfs(dfs, 0, 0))
                return {k, color};
        }
    }

} // namespace detail

/// Valid when no non-unitary facet is monochromatic and colours lie in 1..k.
inline auto is_valid(const Complex & c, const Coloring & col) -> bool
{
    if (col.vertices != c.vertices() || col.color.size() != c.vertex_count())
        return false;
    if (std::any_of(col.color.begin(), col.color.end(), [&](std::size_t x) { return x < 1 || x > col.k; }))
        return false;
    for (auto f : c.facets())
        if (popcount(f) >= 2 && detail::monochromatic(f, col.color))
            return false;
    return true;
}

inline auto is_valid(const GraphView & g, const Coloring & col) -> bool
{
    if (col.vertices != g.vertices || col.color.size() != g.vertices.size())
        return false;
    if (std::any_of(col.color.begin(), col.color.end(), [&](std::size_t x) { return x < 1 || x > col.k; }))
        return false;
    return std::all_of(g.edges.begin(), g.edges.end(), [&](auto e) { return col.color[e.first] != col.color[e.second]; });
}

/// Exact chromatic number of a complex (no monochromatic non-unitary facet).
inline auto chromatic_number(const Complex & c) -> ChromaticResult
{
    auto [k, color] = detail::weak_coloring(c.vertex_count(), c.non_unitary_facets());
    return {k, detail::make_coloring(c.vertices(), std::move(color), k)};
}

/// Exact proper-colouring chromatic number of a graph.
inline auto graph_chromatic_number(const GraphView & g) -> ChromaticResult
{
    std::vector<Mask> edges;
    for (auto [a, b] : g.edges)
        edges.push_back(bit(a) | bit(b));
    auto [k, color] = detail::weak_coloring(g.vertices.size(), edges);
    return {k, detail::make_coloring(g.vertices, std::move(color), k)};
}

/// Strict chromatic number, i.e. the chromatic number of the underlying graph.
inline auto strict_chromatic_number(const Complex & c) -> ChromaticResult
{
    return graph_chromatic_number(underlying_graph(c));
}

/**
 * Turns an n-colouring of the underlying graph into a ceil(n/d)-colouring of
 * the complex, where d is the least facet dimension: graph colours 1..d form
 * block 1, d+1..2d block 2, and so on. Every facet has at least d+1 vertices
 * with pairwise different graph colours, so no facet fits inside one block.
 */
inline auto block_coloring(const Complex & c, const Coloring & graph_witness) -> Coloring
{
    auto g = underlying_graph(c);
    if (! is_valid(g, graph_witness))
        throw Error("block colouring: the witness is not a proper colouring of the underlying graph");
    auto m = metrics(c);
    if (! m.min_facet_size || *m.min_facet_size < 2)
        throw Error("block colouring needs every facet to have dimension d > 0");
    auto d = *m.min_facet_size - 1;
    auto n = graph_witness.k;
    auto k = (n + d - 1) / d;
    std::vector<std::size_t> color;
    for (auto x : graph_witness.color)
        color.push_back((x - 1) / d + 1);
    return detail::make_coloring(c.vertices(), std::move(color), k);
}

/**
 * Colours each vertex by the tuple of its colours in the parts (colour 1 where
 * a part lacks the vertex), then numbers the occurring tuples in order.
 */
inline auto product_coloring(const Complex & c, const std::vector<std::pair<Complex, Coloring>> & parts) -> Coloring
{
    for (const auto & [part, col] : parts) {
        if (! is_subcomplex(part, c))
            throw Error("product colouring: a part is not a subcomplex");
        if (! is_valid(part, col))
            throw Error("product colouring: a part's colouring is invalid");
    }
    for (auto f : c.facets()) {
        auto labels = c.labels_of(f);
        bool covered = std::any_of(parts.begin(), parts.end(), [&](const auto & p) {
            Mask m = 0;
            for (const auto & l : labels) {
                auto i = p.first.index_of(l);
                if (! i)
                    return false;
                m |= bit(*i);
            }
            return p.first.is_face(m);
        });
        if (! covered) {
            std::string s;
            for (const auto & l : labels)
                s += (s.empty() ? "" : ",") + l;
            throw Error("product colouring: facet {" + s + "} is not covered by the parts");
        }
    }
    std::vector<std::vector<std::size_t>> tuples;
    for (const auto & v : c.vertices()) {
        std::vector<std::size_t> t;
        for (const auto & [part, col] : parts)
            t.push_back(part.index_of(v) ? col.color_of(v) : 1);
        tuples.push_back(std::move(t));
    }
    auto distinct = tuples;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::size_t> color;
    for (const auto & t : tuples)
        color.push_back(static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), t) - distinct.begin()) + 1);
    return detail::make_coloring(c.vertices(), std::move(color), distinct.size());
}

/// Colour of a vertex is the target colour of its image.
inline auto pullback_coloring(const VertexMap & m, const Coloring & target_witness) -> Coloring
{
    if (! classify(m).facet)
        throw Error("pullback colouring needs a facet simplicial map");
    if (! is_valid(m.target, target_witness))
        throw Error("pullback colouring: the target colouring is invalid");
    std::vector<std::size_t> color;
    for (auto w : m.image)
        color.push_back(target_witness.color[w]);
    return detail::make_coloring(m.source.vertices(), std::move(color), target_witness.k);
}

} // namespace facetcx

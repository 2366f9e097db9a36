#pragma once

#include <facetcx/bits.hpp>
#include <facetcx/error.hpp>
#include <facetcx/random.hpp>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace facetcx {

/// A face written out as vertex labels.
using Face = std::vector<std::string>;

/**
 * An abstract simplicial complex, stored by its facets.
 *
 * Vertices are opaque text labels kept in lexicographic order; vertex i is
 * bit i of a Mask. Facets form an antichain sorted lexicographically, and an
 * isolated vertex is a singleton facet, so every vertex lies in some facet.
 * A face is any non-empty subset of a facet. Instances are immutable.
 */
class Complex {
public:
    Complex() = default;

    /// Builds from generating faces; non-maximal faces are absorbed.
    static auto from_faces(const std::vector<Face> & faces,
        const std::optional<std::vector<std::string>> & explicit_vertices = std::nullopt,
        std::string name = {}) -> Complex;

    /// Builds from faces given as masks over `labels` (any order, no duplicates).
    /// Every label becomes a vertex; uncovered labels become singleton facets.
    static auto from_masks(std::vector<std::string> labels, std::vector<Mask> faces, std::string name = {}) -> Complex;

    auto name() const -> const std::string & { return name_; }
    auto with_name(std::string name) const -> Complex
    {
        auto c = *this;
        c.name_ = std::move(name);
        return c;
    }

    auto vertices() const -> const std::vector<std::string> & { return vertices_; }
    auto facets() const -> std::span<const Mask> { return facets_; }
    auto vertex_count() const -> std::size_t { return vertices_.size(); }
    auto facet_count() const -> std::size_t { return facets_.size(); }
    auto empty() const -> bool { return vertices_.empty(); }
    auto all() const -> Mask { return low_bits(vertices_.size()); }

    auto index_of(std::string_view label) const -> std::optional<std::size_t>
    {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label);
        if (it == vertices_.end() || *it != label)
            return std::nullopt;
        return static_cast<std::size_t>(it - vertices_.begin());
    }

    auto label(std::size_t i) const -> const std::string & { return vertices_.at(i); }

    auto labels_of(Mask m) const -> Face
    {
        Face out;
        for_each_bit(m, [&](std::size_t i) { out.push_back(vertices_[i]); });
        return out;
    }

    /// Mask of a labelled vertex set; throws if a label is unknown.
    auto mask_of(const Face & labels) const -> Mask
    {
        Mask m = 0;
        for (const auto & l : labels) {
            auto i = index_of(l);
            if (! i)
                throw Error("unknown vertex '" + l + "'");
            m |= bit(*i);
        }
        return m;
    }

    auto is_face(Mask s) const -> bool
    {
        if (s == 0)
            return false;
        return std::any_of(facets_.begin(), facets_.end(), [&](Mask f) { return is_subset(s, f); });
    }

    auto is_facet(Mask s) const -> bool { return std::find(facets_.begin(), facets_.end(), s) != facets_.end(); }

    auto facet_index(Mask s) const -> std::optional<std::size_t>
    {
        auto it = std::find(facets_.begin(), facets_.end(), s);
        if (it == facets_.end())
            return std::nullopt;
        return static_cast<std::size_t>(it - facets_.begin());
    }

    /// Facets with at least two vertices.
    auto non_unitary_facets() const -> std::vector<Mask>
    {
        std::vector<Mask> out;
        for (auto f : facets_)
            if (popcount(f) >= 2)
                out.push_back(f);
        return out;
    }

    auto isolated() const -> Mask
    {
        Mask m = 0;
        for (auto f : facets_)
            if (popcount(f) == 1)
                m |= f;
        return m;
    }

    auto dim() const -> int
    {
        std::size_t best = 0;
        for (auto f : facets_)
            best = std::max(best, popcount(f));
        return static_cast<int>(best) - 1;
    }

    /// Structural equality; the name is not compared.
    friend auto operator==(const Complex & a, const Complex & b) -> bool
    {
        return a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
    }

private:
    std::string name_;
    std::vector<std::string> vertices_;
    std::vector<Mask> facets_;
};

namespace detail {

    inline auto trim(std::string_view s) -> std::string_view
    {
        auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
        while (! s.empty() && is_space(s.front()))
            s.remove_prefix(1);
        while (! s.empty() && is_space(s.back()))
            s.remove_suffix(1);
        return s;
    }

    inline void check_labels(const std::set<std::string> & labels)
    {
        std::set<std::string, std::less<>> trimmed;
        for (const auto & l : labels) {
            auto t = std::string(trim(l));
            if (t.empty())
                throw Error("empty vertex label");
            if (! trimmed.insert(t).second)
                throw Error("duplicate vertex label '" + t + "' (labels differ only by surrounding whitespace)");
        }
        for (const auto & l : labels)
            if (std::any_of(l.begin(), l.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }))
                throw Error("vertex label '" + l + "' contains whitespace");
    }

    /// Keeps the maximal elements of `faces`, sorted lexicographically.
    inline auto maximal(std::vector<Mask> faces) -> std::vector<Mask>
    {
        std::sort(faces.begin(), faces.end(), [](Mask a, Mask b) {
            return popcount(a) != popcount(b) ? popcount(a) > popcount(b) : a < b;
        });
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        std::vector<Mask> kept;
        for (auto f : faces) {
            if (f == 0)
                continue;
            if (std::none_of(kept.begin(), kept.end(), [&](Mask k) { return is_subset(f, k); }))
                kept.push_back(f);
        }
        std::sort(kept.begin(), kept.end(), lex_less);
        return kept;
    }

} // namespace detail

inline auto Complex::from_masks(std::vector<std::string> labels, std::vector<Mask> faces, std::string name) -> Complex
{
    if (labels.size() > max_vertices)
        throw Error("complexes are limited to " + std::to_string(max_vertices) + " vertices");
    std::vector<std::size_t> order(labels.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (labels[order[i]] == labels[order[i - 1]])
            throw Error("duplicate vertex label '" + labels[order[i]] + "'");
    std::vector<std::size_t> rank(labels.size());
    for (std::size_t r = 0; r < order.size(); ++r)
        rank[order[r]] = r;

    Complex c;
    c.name_ = std::move(name);
    c.vertices_.reserve(labels.size());
    for (auto i : order)
        c.vertices_.push_back(std::move(labels[i]));

    Mask covered = 0;
    for (auto & f : faces) {
        if (! is_subset(f, low_bits(rank.size())))
            throw Error("face refers to a vertex outside the label list");
        Mask g = 0;
        for_each_bit(f, [&](std::size_t i) { g |= bit(rank[i]); });
        f = g;
        covered |= g;
    }
    for_each_bit(c.all() & ~covered, [&](std::size_t i) { faces.push_back(bit(i)); });
    c.facets_ = detail::maximal(std::move(faces));
    return c;
}

inline auto Complex::from_faces(const std::vector<Face> & faces,
    const std::optional<std::vector<std::string>> & explicit_vertices, std::string name) -> Complex
{
    std::set<std::string> labels;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (faces[i].empty())
            throw Error("face #" + std::to_string(i) + " is empty");
        labels.insert(faces[i].begin(), faces[i].end());
    }
    if (explicit_vertices) {
        std::set<std::string> declared(explicit_vertices->begin(), explicit_vertices->end());
        for (const auto & l : labels)
            if (! declared.count(l))
                throw Error("vertex '" + l + "' is used by a face but not declared");
        labels = std::move(declared);
    }
    detail::check_labels(labels);

    std::vector<std::string> list(labels.begin(), labels.end());
    std::vector<Mask> masks;
    masks.reserve(faces.size());
    for (const auto & face : faces) {
        Mask m = 0;
        for (const auto & l : face)
            m |= bit(static_cast<std::size_t>(std::lower_bound(list.begin(), list.end(), l) - list.begin()));
        masks.push_back(m);
    }
    return from_masks(std::move(list), std::move(masks), std::move(name));
}

// ---------------------------------------------------------------------------
// Metrics

struct Metrics {
    int dim = -1;
    std::size_t eta = 0;
    bool pure = false;
    /// degree[v]: distinct neighbours of v.
    std::vector<std::size_t> degree;
    /// d_degree[v][d]: distinct vertices sharing a d-simplex with v (index 0 unused).
    std::vector<std::vector<std::size_t>> d_degree;
    Mask isolated = 0;
    std::optional<std::size_t> min_facet_size;
    std::optional<std::size_t> min_nonunitary_facet_size;
};

/// Neighbourhood of v through facets of size at least `min_size` (v excluded).
inline auto neighbourhood(const Complex & c, std::size_t v, std::size_t min_size = 2) -> Mask
{
    Mask n = 0;
    for (auto f : c.facets())
        if ((f & bit(v)) && popcount(f) >= min_size)
            n |= f;
    return n & ~bit(v);
}

inline auto metrics(const Complex & c) -> Metrics
{
    Metrics m;
    m.dim = c.dim();
    m.eta = c.facet_count();
    m.pure = ! c.empty() && std::all_of(c.facets().begin(), c.facets().end(),
                                [&](Mask f) { return static_cast<int>(popcount(f)) - 1 == m.dim; });
    m.isolated = c.isolated();
    auto n = c.vertex_count();
    m.degree.resize(n);
    m.d_degree.assign(n, std::vector<std::size_t>(static_cast<std::size_t>(std::max(m.dim, 0)) + 1, 0));
    for (std::size_t v = 0; v < n; ++v) {
        m.degree[v] = popcount(neighbourhood(c, v));
        for (int d = 1; d <= m.dim; ++d)
            m.d_degree[v][static_cast<std::size_t>(d)] = popcount(neighbourhood(c, v, static_cast<std::size_t>(d) + 1));
    }
    for (auto f : c.facets()) {
        auto s = popcount(f);
        if (! m.min_facet_size || s < *m.min_facet_size)
            m.min_facet_size = s;
        if (s >= 2 && (! m.min_nonunitary_facet_size || s < *m.min_nonunitary_facet_size))
            m.min_nonunitary_facet_size = s;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Graphs

/// A simple graph over labelled vertices; edges hold vertex indices with first < second.
struct GraphView {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    auto adjacency() const -> std::vector<Mask>
    {
        std::vector<Mask> adj(vertices.size(), 0);
        for (auto [a, b] : edges) {
            adj[a] |= bit(b);
            adj[b] |= bit(a);
        }
        return adj;
    }

    friend auto operator==(const GraphView &, const GraphView &) -> bool = default;
};

namespace detail {
    inline auto graph_from(const Complex & c, Mask vertices, const std::vector<Mask> & edge_masks) -> GraphView
    {
        GraphView g;
        std::vector<std::size_t> to_local(c.vertex_count(), 0);
        for_each_bit(vertices, [&](std::size_t i) {
            to_local[i] = g.vertices.size();
            g.vertices.push_back(c.label(i));
        });
        std::set<std::pair<std::size_t, std::size_t>> edges;
        for (auto e : edge_masks) {
            auto a = lowest(e), b = lowest(e & (e - 1));
            edges.emplace(to_local[a], to_local[b]);
        }
        g.edges.assign(edges.begin(), edges.end());
        return g;
    }
} // namespace detail

/// The 1-skeleton as a graph: every pair inside a facet is an edge.
inline auto underlying_graph(const Complex & c) -> GraphView
{
    std::vector<Mask> edges;
    for (auto f : c.facets())
        for_each_k_subset(f, 2, [&](Mask e) { edges.push_back(e); });
    return detail::graph_from(c, c.all(), edges);
}

/// The graph whose edges are the 1-dimensional facets.
inline auto facet_graph(const Complex & c) -> GraphView
{
    std::vector<Mask> edges;
    Mask vs = 0;
    for (auto f : c.facets())
        if (popcount(f) == 2) {
            edges.push_back(f);
            vs |= f;
        }
    return detail::graph_from(c, vs, edges);
}

/// A graph viewed as a complex of dimension at most one.
inline auto graph_as_complex(const GraphView & g, std::string name = {}) -> Complex
{
    std::vector<Mask> faces;
    for (auto [a, b] : g.edges)
        faces.push_back(bit(a) | bit(b));
    return Complex::from_masks(g.vertices, std::move(faces), std::move(name));
}

inline auto complete_graph(std::size_t n) -> GraphView
{
    GraphView g;
    for (std::size_t i = 1; i <= n; ++i)
        g.vertices.push_back(std::to_string(i));
    std::sort(g.vertices.begin(), g.vertices.end());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            g.edges.emplace_back(a, b);
    return g;
}

// ---------------------------------------------------------------------------
// Derived complexes

/// All simplices of dimension at most q.
inline auto skeleton(const Complex & c, std::size_t q) -> Complex
{
    std::vector<Mask> faces;
    for (auto f : c.facets()) {
        if (popcount(f) <= q + 1)
            faces.push_back(f);
        else
            for_each_k_subset(f, q + 1, [&](Mask s) { faces.push_back(s); });
    }
    return Complex::from_masks(c.vertices(), std::move(faces), c.name());
}

/// Union of complexes; with `disjoint`, vertex sets must not meet.
inline auto unite(std::span<const Complex> parts, bool disjoint) -> Complex
{
    if (parts.empty())
        throw Error("union of an empty list");
    std::set<std::string> labels;
    for (const auto & p : parts)
        for (const auto & v : p.vertices()) {
            if (! labels.insert(v).second && disjoint)
                throw Error("disjoint union: vertex '" + v + "' is shared");
        }
    std::vector<std::string> list(labels.begin(), labels.end());
    std::vector<Mask> faces;
    for (const auto & p : parts)
        for (auto f : p.facets()) {
            Mask m = 0;
            for_each_bit(f, [&](std::size_t i) {
                m |= bit(static_cast<std::size_t>(std::lower_bound(list.begin(), list.end(), p.label(i)) - list.begin()));
            });
            faces.push_back(m);
        }
    return Complex::from_masks(std::move(list), std::move(faces));
}

inline auto unite(std::initializer_list<Complex> parts, bool disjoint) -> Complex
{
    return unite(std::span<const Complex>(parts.begin(), parts.size()), disjoint);
}

/// Downward closure of some facets of c, on the vertices they span.
inline auto closure(const Complex & c, std::span<const Mask> facet_subset) -> Complex
{
    Mask span = 0;
    for (auto f : facet_subset) {
        if (! c.is_facet(f))
            throw Error("closure: {" + [&] {
                std::string s;
                for (const auto & l : c.labels_of(f))
                    s += (s.empty() ? "" : ",") + l;
                return s;
            }() + "} is not a facet");
        span |= f;
    }
    std::vector<std::string> labels;
    std::vector<std::size_t> local(c.vertex_count(), 0);
    for_each_bit(span, [&](std::size_t i) {
        local[i] = labels.size();
        labels.push_back(c.label(i));
    });
    std::vector<Mask> faces;
    for (auto f : facet_subset) {
        Mask m = 0;
        for_each_bit(f, [&](std::size_t i) { m |= bit(local[i]); });
        faces.push_back(m);
    }
    return Complex::from_masks(std::move(labels), std::move(faces), c.name());
}

/// Closure of the facets selected by a bitmask over facet indices.
inline auto closure_of_group(const Complex & c, Mask group) -> Complex
{
    std::vector<Mask> fs;
    for_each_bit(group, [&](std::size_t i) { fs.push_back(c.facets()[i]); });
    return closure(c, fs);
}

/// True when every facet of `sub` (matched by label) is a simplex of `c`.
inline auto is_subcomplex(const Complex & sub, const Complex & c) -> bool
{
    for (auto f : sub.facets()) {
        Mask m = 0;
        for (const auto & l : sub.labels_of(f)) {
            auto i = c.index_of(l);
            if (! i)
                return false;
            m |= bit(*i);
        }
        if (! c.is_face(m))
            return false;
    }
    return true;
}

/// Renames vertices; `rename` must be injective on the vertex set.
inline auto relabel(const Complex & c, const std::map<std::string, std::string> & rename) -> Complex
{
    std::vector<std::string> labels;
    for (const auto & v : c.vertices()) {
        auto it = rename.find(v);
        labels.push_back(it == rename.end() ? v : it->second);
    }
    return Complex::from_masks(std::move(labels), std::vector<Mask>(c.facets().begin(), c.facets().end()), c.name());
}

/// Groups facets into classes of facets linked through shared vertices.
inline auto facet_components(const Complex & c) -> std::vector<Mask>
{
    std::vector<Mask> comps; // each entry: vertex span of one component
    for (auto f : c.facets()) {
        Mask merged = f;
        std::vector<Mask> rest;
        for (auto s : comps) {
            if (s & merged)
                merged |= s;
            else
                rest.push_back(s);
        }
        rest.push_back(merged);
        comps = std::move(rest);
    }
    std::sort(comps.begin(), comps.end(), lex_less);
    return comps;
}

/// Restriction of c to the facets inside a vertex span.
inline auto component(const Complex & c, Mask span) -> Complex
{
    std::vector<Mask> fs;
    for (auto f : c.facets())
        if (is_subset(f, span))
            fs.push_back(f);
    return closure(c, fs);
}

// ---------------------------------------------------------------------------
// Generators

enum class GenerateKind { gamma, kn, random };

struct GenerateParams {
    std::size_t max_facet_size = 3;
    double density = 0.5;
    std::optional<std::uint64_t> seed;
};

namespace detail {
    inline auto numbered(std::size_t n) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        for (std::size_t i = 1; i <= n; ++i)
            out.push_back(std::to_string(i));
        return out;
    }

    inline auto kind_name(GenerateKind k) -> std::string
    {
        switch (k) {
        case GenerateKind::gamma: return "gamma";
        case GenerateKind::kn: return "kn";
        case GenerateKind::random: return "random";
        }
        return "?";
    }
} // namespace detail

/// The complete complex on n vertices labelled 1..n.
inline auto gamma(std::size_t n) -> Complex
{
    if (n < 1)
        throw Error("gamma(n) needs n >= 1");
    return Complex::from_masks(detail::numbered(n), {low_bits(n)}, "Gamma_" + std::to_string(n));
}

/// All proper subsets of an n-set: n facets of size n-1.
inline auto boundary(std::size_t n) -> Complex
{
    if (n < 2)
        throw Error("kn(n) needs n >= 2");
    std::vector<Mask> faces;
    for (std::size_t i = 0; i < n; ++i)
        faces.push_back(low_bits(n) & ~bit(i));
    return Complex::from_masks(detail::numbered(n), std::move(faces), "K_" + std::to_string(n));
}

/// Each candidate face of size <= max_facet_size is kept with probability
/// `density`; vertices hit by no kept face stay as singletons.
inline auto random_complex(std::size_t n, const GenerateParams & params) -> Complex
{
    if (n < 1)
        throw Error("random(n) needs n >= 1");
    if (! params.seed)
        throw Error("random generation requires a seed");
    if (params.max_facet_size < 1)
        throw Error("max_facet_size must be at least 1");
    if (! (params.density >= 0.0 && params.density <= 1.0))
        throw Error("density must lie in [0,1]");
    Rng rng(*params.seed);
    std::vector<Mask> faces;
    for (std::size_t k = 1; k <= std::min(params.max_facet_size, n); ++k)
        for_each_k_subset(low_bits(n), k, [&](Mask s) {
            if (chance(rng, params.density))
                faces.push_back(s);
        });
    return Complex::from_masks(detail::numbered(n), std::move(faces), "random_" + std::to_string(n));
}

inline auto generate(GenerateKind kind, std::size_t n, const GenerateParams & params = {}) -> Complex
{
    switch (kind) {
    case GenerateKind::gamma: return gamma(n);
    case GenerateKind::kn: return boundary(n);
    case GenerateKind::random: return random_complex(n, params);
    }
    throw Error("unknown generator " + detail::kind_name(kind));
}

} // namespace facetcx

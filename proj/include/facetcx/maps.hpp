#pragma once

#include <facetcx/complex.hpp>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace facetcx {

/// A total vertex map from `source` to `target`: vertex i goes to image[i].
struct VertexMap {
    Complex source;
    Complex target;
    std::vector<std::size_t> image;

    auto image_of(Mask face) const -> Mask
    {
        Mask out = 0;
        for_each_bit(face, [&](std::size_t i) { out |= bit(image[i]); });
        return out;
    }

    auto label_of(const std::string & v) const -> const std::string &
    {
        auto i = source.index_of(v);
        if (! i)
            throw Error("vertex '" + v + "' is not in the source");
        return target.label(image[*i]);
    }

    friend auto operator==(const VertexMap &, const VertexMap &) -> bool = default;
};

/// Builds a map from label pairs; every source vertex must be assigned.
inline auto make_map(Complex source, Complex target, const std::map<std::string, std::string> & assignment) -> VertexMap
{
    VertexMap m{std::move(source), std::move(target), {}};
    for (const auto & v : m.source.vertices()) {
        auto it = assignment.find(v);
        if (it == assignment.end())
            throw Error("source vertex '" + v + "' is unmapped");
        auto w = m.target.index_of(it->second);
        if (! w)
            throw Error("image '" + it->second + "' is not a target vertex");
        m.image.push_back(*w);
    }
    return m;
}

inline auto identity_map(const Complex & c) -> VertexMap
{
    VertexMap m{c, c, {}};
    for (std::size_t i = 0; i < c.vertex_count(); ++i)
        m.image.push_back(i);
    return m;
}

/// Inclusion of a subcomplex, matched by label.
inline auto inclusion_map(const Complex & sub, const Complex & c) -> VertexMap
{
    std::map<std::string, std::string> a;
    for (const auto & v : sub.vertices())
        a.emplace(v, v);
    return make_map(sub, c, a);
}

struct MapClass {
    bool simplicial = false;
    bool strict = false;
    bool facet = false;
    bool injective = false;
    /// First source facet (canonical order) breaking simpliciality, strictness or the facet property.
    std::optional<Mask> simplicial_witness;
    std::optional<Mask> strict_witness;
    std::optional<Mask> facet_witness;
    /// Two source vertices with the same image.
    std::optional<Mask> injective_witness;
};

/// Classification on raw image indices; `image` is indexed by source vertex.
inline auto classify(const Complex & source, const Complex & target, std::span<const std::size_t> image) -> MapClass
{
    MapClass r;
    auto img = [&](Mask f) {
        Mask out = 0;
        for_each_bit(f, [&](std::size_t i) { out |= bit(image[i]); });
        return out;
    };
    for (auto f : source.facets()) {
        auto g = img(f);
        if (! r.simplicial_witness && ! target.is_face(g))
            r.simplicial_witness = f;
        if (! r.strict_witness && (popcount(g) != popcount(f) || ! target.is_face(g)))
            r.strict_witness = f;
        if (! r.facet_witness && popcount(f) >= 2 && ! (popcount(g) >= 2 && target.is_facet(g)))
            r.facet_witness = f;
    }
    r.simplicial = ! r.simplicial_witness;
    r.strict = r.simplicial && ! r.strict_witness;
    // a unitary facet always lands on a vertex, so a non-simplicial map already has a facet witness
    r.facet = ! r.facet_witness;

    std::vector<std::optional<std::size_t>> seen(target.vertex_count());
    r.injective = true;
    for (std::size_t v = 0; v < image.size() && r.injective; ++v) {
        auto & s = seen[image[v]];
        if (s) {
            r.injective = false;
            r.injective_witness = bit(*s) | bit(v);
        }
        else
            s = v;
    }
    return r;
}

inline auto classify(const VertexMap & m) -> MapClass { return classify(m.source, m.target, m.image); }

/// Preimage of `sub` (a subcomplex of the target) through a simplicial map.
inline auto image_inverse(const VertexMap & m, const Complex & sub) -> Complex
{
    if (! classify(m).simplicial)
        throw Error("image inverse needs a simplicial map");
    if (! is_subcomplex(sub, m.target))
        throw Error("image inverse: complex is not a subcomplex of the target");
    // sub's facets in target indices
    std::vector<Mask> sub_facets;
    Mask sub_vertices = 0;
    for (auto h : sub.facets()) {
        auto t = m.target.mask_of(sub.labels_of(h));
        sub_facets.push_back(t);
        sub_vertices |= t;
    }
    auto preimage = [&](Mask t) {
        Mask s = 0;
        for (std::size_t v = 0; v < m.image.size(); ++v)
            if (t & bit(m.image[v]))
                s |= bit(v);
        return s;
    };
    auto w = preimage(sub_vertices);
    std::vector<Mask> faces;
    for (auto g : m.source.facets())
        for (auto h : sub_facets)
            if (auto s = g & preimage(h))
                faces.push_back(s);

    std::vector<std::string> labels;
    std::vector<std::size_t> local(m.source.vertex_count(), 0);
    for_each_bit(w, [&](std::size_t i) {
        local[i] = labels.size();
        labels.push_back(m.source.label(i));
    });
    for (auto & f : faces) {
        Mask g = 0;
        for_each_bit(f, [&](std::size_t i) { g |= bit(local[i]); });
        f = g;
    }
    return Complex::from_masks(std::move(labels), std::move(faces));
}

/// second after first.
inline auto compose(const VertexMap & first, const VertexMap & second) -> VertexMap
{
    if (! (first.target == second.source))
        throw Error("compose: the first map's target differs from the second map's source");
    VertexMap out{first.source, second.target, {}};
    for (auto w : first.image)
        out.image.push_back(second.image[w]);
    return out;
}

/// The same assignment seen on a subcomplex of the source, or into a complex
/// that contains every image vertex (both matched by label).
inline auto restrict_map(const VertexMap & m, const Complex & new_source, const Complex & new_target) -> VertexMap
{
    std::map<std::string, std::string> a;
    for (const auto & v : new_source.vertices())
        a.emplace(v, m.label_of(v));
    return make_map(new_source, new_target, a);
}

/// Inverse of a bijective map.
inline auto inverse_map(const VertexMap & m) -> VertexMap
{
    if (m.source.vertex_count() != m.target.vertex_count() || ! classify(m).injective)
        throw Error("inverse of a non-bijective map");
    VertexMap out{m.target, m.source, std::vector<std::size_t>(m.image.size())};
    for (std::size_t v = 0; v < m.image.size(); ++v)
        out.image[m.image[v]] = v;
    return out;
}

} // namespace facetcx

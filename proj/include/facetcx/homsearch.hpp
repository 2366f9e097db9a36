#pragma once

#include <facetcx/complex.hpp>
#include <facetcx/maps.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace facetcx {

enum class MapKind { facet, strict };

inline auto to_string(MapKind k) -> std::string { return k == MapKind::facet ? "facet" : "strict"; }

struct SearchLimits {
    std::uint64_t nodes = std::numeric_limits<std::uint64_t>::max();
    double seconds = std::numeric_limits<double>::infinity();
};

struct SearchProblem {
    Complex source;
    Complex target;
    MapKind kind = MapKind::facet;
    bool injective = false;
    SearchLimits limits{};
};

enum class SearchStatus { found, none, undecided };

struct SearchResult {
    SearchStatus status = SearchStatus::none;
    std::optional<VertexMap> map;
    std::uint64_t nodes = 0;

    auto found() const -> bool { return status == SearchStatus::found; }
};

namespace detail {

    inline constexpr std::size_t unmapped = std::numeric_limits<std::size_t>::max();

    struct RawSearch {
        SearchStatus status = SearchStatus::none;
        std::vector<std::size_t> image;
        std::uint64_t nodes = 0;
    };

    /// Per-vertex degree profile inside a facet list: entry d counts the
    /// vertices sharing a d-simplex with v (entry 0 is the plain degree).
    inline auto degree_profile(std::span<const Mask> facets, std::size_t v, std::size_t top) -> std::vector<std::size_t>
    {
        std::vector<std::size_t> out(top + 1, 0);
        for (std::size_t d = 1; d <= top; ++d) {
            Mask n = 0;
            for (auto f : facets)
                if ((f & bit(v)) && popcount(f) >= d + 1)
                    n |= f;
            out[d] = popcount(n & ~bit(v));
        }
        out[0] = top >= 1 ? out[1] : 0;
        return out;
    }

    /**
     * Backtracking search for a vertex map from the complex generated by
     * `facets` (over vertex indices < universe) into `target`.
     *
     * facet kind: every non-unitary source facet F must land exactly on some
     * non-unitary target facet G with |G| <= |F| (|G| = |F| when injective).
     * Since every simplex lies in a facet, this is the whole facet-map
     * condition. While F is partially assigned, some such G must contain the
     * partial image and have no more uncovered vertices than F has unassigned.
     *
     * strict kind: every facet F must be mapped injectively into a target facet.
     */
    class Searcher {
    public:
        Searcher(std::span<const Mask> facets, std::size_t universe, const Complex & target, MapKind kind, bool injective,
            const SearchLimits & limits) :
            target_(target),
            kind_(kind),
            injective_(injective),
            limits_(limits),
            image_(universe, unmapped)
        {
            for (auto f : facets) {
                verts_ |= f;
                if (popcount(f) >= 2)
                    source_facets_.push_back(f);
            }
            all_facets_.assign(facets.begin(), facets.end());
        }

        auto run() -> RawSearch
        {
            RawSearch out;
            if (verts_ == 0) {
                out.status = SearchStatus::found;
                out.image = image_;
                return out;
            }
            if (target_.empty() || ! prepare()) {
                out.status = SearchStatus::none;
                return out;
            }
            start_ = std::chrono::steady_clock::now();
            bool found = false;
            try {
                found = dfs(0);
            }
            catch (const Undecided &) {
                out.status = SearchStatus::undecided;
                out.nodes = nodes_;
                return out;
            }
            out.status = found ? SearchStatus::found : SearchStatus::none;
            out.nodes = nodes_;
            if (found)
                out.image = image_;
            return out;
        }

    private:
        auto prepare() -> bool
        {
            auto tm = target_.facets();
            std::size_t nf = source_facets_.size();
            candidates_.resize(nf);
            for (std::size_t i = 0; i < nf; ++i) {
                auto s = popcount(source_facets_[i]);
                for (auto g : tm) {
                    auto t = popcount(g);
                    bool ok = kind_ == MapKind::facet ? (t >= 2 && (injective_ ? t == s : t <= s)) : t >= s;
                    if (ok)
                        candidates_[i].push_back(g);
                }
                if (candidates_[i].empty())
                    return false;
            }

            auto nv = image_.size();
            domain_.assign(nv, target_.all());
            containing_.assign(nv, {});
            for (std::size_t i = 0; i < nf; ++i) {
                Mask reach = 0;
                for (auto g : candidates_[i])
                    reach |= g;
                for_each_bit(source_facets_[i], [&](std::size_t v) {
                    domain_[v] &= reach;
                    containing_[v].push_back(i);
                });
            }

            if (injective_) {
                if (popcount(verts_) > target_.vertex_count())
                    return false;
                std::size_t top = 0;
                for (auto f : all_facets_)
                    top = std::max(top, popcount(f) - 1);
                auto target_facets = std::vector<Mask>(tm.begin(), tm.end());
                std::vector<std::vector<std::size_t>> tdeg(target_.vertex_count());
                for (std::size_t w = 0; w < target_.vertex_count(); ++w)
                    tdeg[w] = degree_profile(target_facets, w, top);
                for_each_bit(verts_, [&](std::size_t v) {
                    auto sdeg = degree_profile(all_facets_, v, top);
                    for_each_bit(domain_[v], [&](std::size_t w) {
                        for (std::size_t d = 0; d <= top; ++d)
                            if (tdeg[w][d] < sdeg[d]) {
                                domain_[v] &= ~bit(w);
                                break;
                            }
                    });
                });
            }
            bool empty_domain = false;
            for_each_bit(verts_, [&](std::size_t v) { empty_domain = empty_domain || domain_[v] == 0; });
            if (empty_domain)
                return false;

            // facets with fewest candidates first, their vertices by falling degree
            std::vector<std::size_t> forder(nf);
            for (std::size_t i = 0; i < nf; ++i)
                forder[i] = i;
            std::stable_sort(forder.begin(), forder.end(), [&](std::size_t a, std::size_t b) {
                return candidates_[a].size() < candidates_[b].size();
            });
            std::vector<std::size_t> degree(nv, 0);
            for_each_bit(verts_, [&](std::size_t v) {
                Mask n = 0;
                for (auto f : source_facets_)
                    if (f & bit(v))
                        n |= f;
                degree[v] = popcount(n & ~bit(v));
            });
            Mask placed = 0;
            for (auto i : forder) {
                auto vs = bits_of(source_facets_[i] & ~placed);
                std::stable_sort(vs.begin(), vs.end(), [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
                for (auto v : vs)
                    order_.push_back(v);
                placed |= source_facets_[i];
            }
            for_each_bit(verts_ & ~placed, [&](std::size_t v) { order_.push_back(v); });

            partial_.assign(nf, 0);
            assigned_.assign(nf, 0);
            return true;
        }

        auto consistent(std::size_t v, std::size_t w) const -> bool
        {
            for (auto i : containing_[v]) {
                auto a = partial_[i] | bit(w);
                auto c = assigned_[i] + 1;
                auto r = popcount(source_facets_[i]) - c;
                if (kind_ == MapKind::facet) {
                    bool ok = std::any_of(candidates_[i].begin(), candidates_[i].end(),
                        [&](Mask g) { return is_subset(a, g) && popcount(g & ~a) <= r; });
                    if (! ok)
                        return false;
                }
                else {
                    if (popcount(a) != c)
                        return false;
                    bool ok = std::any_of(candidates_[i].begin(), candidates_[i].end(),
                        [&](Mask g) { return is_subset(a, g) && popcount(g & ~a) >= r; });
                    if (! ok)
                        return false;
                }
            }
            return true;
        }

        void tick()
        {
            ++nodes_;
            if (nodes_ > limits_.nodes)
                throw Undecided(nodes_);
            if ((nodes_ & 0xfff) == 0 && std::isfinite(limits_.seconds)) {
                std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start_;
                if (spent.count() > limits_.seconds)
                    throw Undecided(nodes_);
            }
        }

        auto dfs(std::size_t pos) -> bool
        {
            if (pos == order_.size())
                return true;
            auto v = order_[pos];
            auto dom = domain_[v];
            if (injective_)
                dom &= ~used_;
            for (Mask rest = dom; rest; rest &= rest - 1) {
                auto w = lowest(rest);
                tick();
                if (! consistent(v, w))
                    continue;
                image_[v] = w;
                used_ |= bit(w);
                auto saved_used = used_;
                for (auto i : containing_[v]) {
                    partial_[i] |= bit(w);
                    ++assigned_[i];
                }
                if (dfs(pos + 1))
                    return true;
                for (auto i : containing_[v])
                    --assigned_[i];
                // rebuild partial images: several vertices may share an image
                for (auto i : containing_[v]) {
                    Mask p = 0;
                    for_each_bit(source_facets_[i], [&](std::size_t u) {
                        if (u != v && image_[u] != unmapped)
                            p |= bit(image_[u]);
                    });
                    partial_[i] = p;
                }
                image_[v] = unmapped;
                (void)saved_used;
                used_ = rebuild_used();
            }
            return false;
        }

        auto rebuild_used() const -> Mask
        {
            if (! injective_)
                return 0;
            Mask u = 0;
            for (auto w : image_)
                if (w != unmapped)
                    u |= bit(w);
            return u;
        }

        const Complex & target_;
        MapKind kind_;
        bool injective_;
        SearchLimits limits_;

        std::vector<Mask> source_facets_;
        std::vector<Mask> all_facets_;
        Mask verts_ = 0;
        std::vector<std::vector<Mask>> candidates_;
        std::vector<Mask> domain_;
        std::vector<std::vector<std::size_t>> containing_;
        std::vector<std::size_t> order_;

        std::vector<std::size_t> image_;
        std::vector<Mask> partial_;
        std::vector<std::size_t> assigned_;
        Mask used_ = 0;
        std::uint64_t nodes_ = 0;
        std::chrono::steady_clock::time_point start_;
    };

    inline auto search(std::span<const Mask> facets, std::size_t universe, const Complex & target, MapKind kind,
        bool injective, const SearchLimits & limits) -> RawSearch
    {
        return Searcher(facets, universe, target, kind, injective, limits).run();
    }

} // namespace detail

/// Decides whether a (possibly injective) facet or strict map exists and
/// returns one. `none` is only reported after the search tree is exhausted.
inline auto find_map(const SearchProblem & p) -> SearchResult
{
    auto raw = detail::search(p.source.facets(), p.source.vertex_count(), p.target, p.kind, p.injective, p.limits);
    SearchResult r{raw.status, std::nullopt, raw.nodes};
    if (raw.status == SearchStatus::found)
        r.map = VertexMap{p.source, p.target, std::move(raw.image)};
    return r;
}

inline auto find_map(const Complex & source, const Complex & target, MapKind kind, bool injective = false,
    SearchLimits limits = {}) -> SearchResult
{
    return find_map(SearchProblem{source, target, kind, injective, limits});
}

/**
 * Memoised feasibility of facet groups of one source complex: a group (a
 * bitmask over facet indices) is feasible when its downward closure admits a
 * map of the requested kind into the target. Lives for one computation.
 */
class GroupFeasibility {
public:
    GroupFeasibility(const Complex & source, const Complex & target, MapKind kind, bool injective, SearchLimits limits = {}) :
        source_(source),
        target_(target),
        kind_(kind),
        injective_(injective),
        limits_(limits)
    {
        if (source.facet_count() > 64)
            throw Error("facet groups are limited to 64 facets");
    }

    /// Throws Undecided when the search budget runs out.
    auto operator()(Mask group) -> bool
    {
        if (group == 0)
            return true;
        if (auto it = memo_.find(group); it != memo_.end())
            return it->second;
        std::vector<Mask> fs;
        for_each_bit(group, [&](std::size_t i) { fs.push_back(source_.facets()[i]); });
        ++probes_;
        auto raw = detail::search(fs, source_.vertex_count(), target_, kind_, injective_, limits_);
        if (raw.status == SearchStatus::undecided)
            throw Undecided(raw.nodes);
        bool ok = raw.status == SearchStatus::found;
        memo_.emplace(group, ok);
        return ok;
    }

    /// A certificate map on the closure of a feasible group.
    auto certificate(Mask group) const -> std::optional<VertexMap>
    {
        auto sub = closure_of_group(source_, group);
        auto r = find_map(sub, target_, kind_, injective_, limits_);
        if (r.status == SearchStatus::undecided)
            throw Undecided(r.nodes);
        return r.map;
    }

    auto probes() const -> std::uint64_t { return probes_; }
    auto source() const -> const Complex & { return source_; }
    auto target() const -> const Complex & { return target_; }

private:
    const Complex & source_;
    const Complex & target_;
    MapKind kind_;
    bool injective_;
    SearchLimits limits_;
    std::unordered_map<Mask, bool> memo_;
    std::uint64_t probes_ = 0;
};

/// Feasibility of one group given as facet masks of c.
inline auto group_feasible(const Complex & c, std::span<const Mask> group, const Complex & target, MapKind kind,
    bool injective, SearchLimits limits = {}) -> bool
{
    Mask g = 0;
    for (auto f : group) {
        auto i = c.facet_index(f);
        if (! i)
            throw Error("group member is not a facet");
        g |= bit(*i);
    }
    return GroupFeasibility(c, target, kind, injective, limits)(g);
}

} // namespace facetcx

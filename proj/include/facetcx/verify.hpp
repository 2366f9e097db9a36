#pragma once

// Seeded property checks. Every check is a pure function of the complexes
// (and one auxiliary number) stored in a Trial, so a failing trial can be
// written out as a bundle and replayed on its own.

#include <facetcx/coloring.hpp>
#include <facetcx/complex.hpp>
#include <facetcx/complexity.hpp>
#include <facetcx/fixtures.hpp>
#include <facetcx/homsearch.hpp>
#include <facetcx/maps.hpp>
#include <facetcx/oracle.hpp>
#include <facetcx/random.hpp>
#include <facetcx/scx.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace facetcx {

struct VerifyConfig {
    std::uint64_t seed = 1;
    std::size_t trials = 200;
    std::size_t max_vertices = 7;
    std::size_t max_facet_size = 4;
    std::size_t max_target_vertices = 4;
    /// Suite names to run; empty runs all.
    std::vector<std::string> properties;
    bool fixtures = true;
    bool observations = true;
    /// Where counterexample bundles go; empty keeps them in memory only.
    std::string bundle_dir;
    std::size_t facet_cap = 20;
};

struct Trial {
    std::vector<std::pair<std::string, Complex>> parts;
    std::uint64_t aux = 0;

    auto get(const std::string & role) const -> const Complex &
    {
        for (const auto & [r, c] : parts)
            if (r == role)
                return c;
        throw Error("trial has no complex '" + role + "'");
    }
};

enum class Outcome { pass, skip, fail };

struct CheckResult {
    Outcome outcome = Outcome::pass;
    std::string message;
};

struct Suite {
    std::string name;
    std::string description;
    std::function<Trial(Rng &, const VerifyConfig &)> make;
    std::function<CheckResult(const Trial &, std::size_t facet_cap)> check;
};

struct SuiteReport {
    std::string name;
    std::size_t passed = 0, skipped = 0, failed = 0;
    std::optional<std::size_t> first_failure;
    std::string message;
    std::string bundle;      // text of the first counterexample
    std::string bundle_path; // where it was written, if anywhere
};

struct VerifyReport {
    std::vector<SuiteReport> suites;
    std::vector<std::string> fixture_lines;
    std::size_t fixture_failures = 0;
    std::vector<std::string> observations;
    std::string text;

    auto ok() const -> bool
    {
        return fixture_failures == 0 &&
            std::all_of(suites.begin(), suites.end(), [](const SuiteReport & s) { return s.failed == 0; });
    }
};

namespace verify_detail {

    struct Skip {};

    inline auto pass() -> CheckResult { return {}; }
    inline auto fail(std::string m) -> CheckResult { return {Outcome::fail, std::move(m)}; }

    inline auto name_hash(const std::string & s) -> std::uint64_t
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    /// A few random faces of size 2..max_size on n vertices, some singletons.
    inline auto sample(Rng & rng, std::size_t n, std::size_t max_faces, std::size_t max_size, const std::string & prefix)
        -> Complex
    {
        std::vector<std::string> labels;
        for (std::size_t i = 1; i <= n; ++i)
            labels.push_back(prefix + std::to_string(i));
        std::vector<Mask> faces;
        auto count = between(rng, 1, max_faces);
        auto top = std::min(max_size, n);
        for (std::size_t k = 0; k < count; ++k) {
            auto size = top >= 2 ? between(rng, 2, top) : 1;
            // partial Fisher-Yates over the vertex indices
            std::vector<std::size_t> idx(n);
            std::iota(idx.begin(), idx.end(), std::size_t{0});
            Mask f = 0;
            for (std::size_t j = 0; j < size; ++j) {
                auto r = j + below(rng, n - j);
                std::swap(idx[j], idx[r]);
                f |= bit(idx[j]);
            }
            faces.push_back(f);
        }
        return Complex::from_masks(std::move(labels), std::move(faces));
    }

    inline auto source(Rng & rng, const VerifyConfig & cfg, std::size_t max_faces = 8) -> Complex
    {
        auto n = between(rng, 2, cfg.max_vertices);
        return sample(rng, n, max_faces, cfg.max_facet_size, "");
    }

    inline auto target(Rng & rng, const VerifyConfig & cfg) -> Complex
    {
        auto n = between(rng, 2, cfg.max_target_vertices);
        switch (below(rng, 4)) {
        case 0: return gamma(n);
        case 1: return n >= 3 ? boundary(n) : gamma(n);
        default: return sample(rng, n, 3, std::min<std::size_t>(n, 4), "t");
        }
    }

    inline auto drop_isolated(const Complex & c) -> Complex
    {
        auto fs = c.non_unitary_facets();
        return closure(c, fs);
    }

    /// A random bijective relabelling.
    inline auto shuffle_labels(const Complex & c, std::uint64_t seed, const std::string & prefix) -> Complex
    {
        Rng rng(seed);
        std::vector<std::size_t> perm(c.vertex_count());
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        for (std::size_t i = perm.size(); i > 1; --i)
            std::swap(perm[i - 1], perm[below(rng, i)]);
        std::map<std::string, std::string> rename;
        for (std::size_t i = 0; i < perm.size(); ++i)
            rename[c.label(i)] = prefix + std::to_string(perm[i] + 1);
        return relabel(c, rename);
    }

    inline auto value(const Complex & l, const Complex & k, MapKind kind, bool inj, std::size_t cap) -> Value
    {
        if (popcount(required_facets({l, k, kind, inj})) > cap)
            throw Skip{};
        auto v = compute(ComplexityQuery{l, k, kind, inj}, ComputeOptions{cap, {}}).value;
        if (v.is_undecided())
            throw Skip{};
        return v;
    }

    inline auto C(const Complex & l, const Complex & k, std::size_t cap) { return value(l, k, MapKind::facet, false, cap); }
    inline auto IC(const Complex & l, const Complex & k, std::size_t cap) { return value(l, k, MapKind::facet, true, cap); }
    inline auto Cs(const Complex & l, const Complex & k, std::size_t cap) { return value(l, k, MapKind::strict, false, cap); }
    inline auto ICs(const Complex & l, const Complex & k, std::size_t cap) { return value(l, k, MapKind::strict, true, cap); }

    inline auto exists(const Complex & l, const Complex & k, MapKind kind, bool inj) -> bool
    {
        return find_map(l, k, kind, inj).found();
    }

    inline auto str(const Value & v) { return v.to_string(); }

    inline auto product(const Value & a, const Value & b) -> Value
    {
        if (! a.is_finite() || ! b.is_finite())
            return Value::infinity();
        return Value::finite(a.get() * b.get());
    }

    inline auto sum(const Value & a, const Value & b) -> Value
    {
        if (! a.is_finite() || ! b.is_finite())
            return Value::infinity();
        return Value::finite(a.get() + b.get());
    }

    inline auto power_at_least(std::size_t base, std::size_t exp, std::size_t x) -> bool
    {
        std::size_t p = 1;
        for (std::size_t i = 0; i < exp && p < x; ++i)
            p *= base;
        return p >= x;
    }

    inline auto pair_trial(Rng & rng, const VerifyConfig & cfg) -> Trial
    {
        return Trial{{{"L", source(rng, cfg)}, {"K", target(rng, cfg)}}, rng()};
    }

    /// Random total map between the complexes of a trial.
    inline auto random_map(const Complex & s, const Complex & t, std::uint64_t seed) -> VertexMap
    {
        Rng rng(seed);
        VertexMap m{s, t, {}};
        for (std::size_t i = 0; i < s.vertex_count(); ++i)
            m.image.push_back(below(rng, t.vertex_count()));
        return m;
    }

    // -----------------------------------------------------------------------
    // structure of complexes, maps and colourings

    inline auto check_core(const Trial & t, std::size_t) -> CheckResult
    {
        const auto & l = t.get("L");
        const auto & k = t.get("K");
        auto fs = l.facets();
        for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = 0; j < fs.size(); ++j)
                if (i != j && is_subset(fs[i], fs[j]))
                    return fail("facets are not an antichain");
        std::vector<Face> faces;
        for (auto f : fs)
            faces.push_back(l.labels_of(f));
        if (! (Complex::from_faces(faces) == l))
            return fail("rebuilding from the facets changes the complex");
        if (! (parse_scx(serialize_scx(l)) == l))
            return fail(".scx round trip changes the complex");
        auto m = metrics(l);
        for (std::size_t v = 0; v < l.vertex_count(); ++v) {
            std::size_t total = 0;
            for (std::size_t d = 1; d < m.d_degree[v].size(); ++d)
                total += m.d_degree[v][d];
            if (m.degree[v] > total)
                return fail("deg(v) exceeds the sum of the d-degrees at " + l.label(v));
        }
        for (std::size_t q = 0; q <= 3; ++q) {
            auto s = skeleton(l, q);
            if (! (skeleton(s, q) == s) || s.dim() > static_cast<int>(q))
                return fail("skeleton " + std::to_string(q) + " is not idempotent or too large");
        }
        auto ug = underlying_graph(l);
        auto fg = facet_graph(l);
        for (auto [a, b] : fg.edges) {
            auto ia = *l.index_of(fg.vertices[a]), ib = *l.index_of(fg.vertices[b]);
            auto e = std::make_pair(std::min(ia, ib), std::max(ia, ib));
            if (std::find(ug.edges.begin(), ug.edges.end(), e) == ug.edges.end())
                return fail("a facet-graph edge is missing from the underlying graph");
        }
        auto h = shuffle_labels(l, t.aux, "x");
        if (! (unite({l, k}, false) == unite({k, l}, false)))
            return fail("union is not commutative");
        if (! (unite({unite({l, k}, false), h}, false) == unite({l, unite({k, h}, false)}, false)))
            return fail("union is not associative");
        return pass();
    }

    inline auto check_maps(const Trial & t, std::size_t) -> CheckResult
    {
        const auto & l = t.get("L");
        const auto & k = t.get("K");
        auto m = random_map(l, k, t.aux);
        auto c = classify(m);
        if ((c.facet && ! c.simplicial) || (c.strict && ! c.simplicial) || (c.injective && c.simplicial && ! c.strict))
            return fail("classification flags break the implication lattice");
        auto lm = metrics(l);
        auto km = metrics(k);
        if (c.injective && c.simplicial)
            for (std::size_t v = 0; v < l.vertex_count(); ++v) {
                auto w = m.image[v];
                if (km.degree[w] < lm.degree[v])
                    return fail("degree decreases under an injective simplicial map");
                for (std::size_t d = 1; d < lm.d_degree[v].size(); ++d)
                    if (d >= km.d_degree[w].size() || km.d_degree[w][d] < lm.d_degree[v][d])
                        return fail("d-degree decreases under an injective simplicial map");
            }
        if (exists(l, k, MapKind::strict, false) && l.dim() > k.dim())
            return fail("strict map into a complex of smaller dimension");

        // restriction to an image inverse is a facet map when the inverse's facets are facets of L
        auto r = find_map(l, k, MapKind::facet, false);
        if (r.found()) {
            Rng rng(t.aux);
            std::vector<Mask> chosen;
            for (auto g : k.facets())
                if (chance(rng, 0.5))
                    chosen.push_back(g);
            if (chosen.empty())
                chosen.push_back(k.facets()[0]);
            auto sub = closure(k, chosen);
            auto inv = image_inverse(*r.map, sub);
            if (! inv.empty()) {
                auto res = restrict_map(*r.map, inv, sub);
                auto rc = classify(res);
                if (! rc.simplicial)
                    return fail("restriction to the image inverse is not simplicial");
                bool lifted = true;
                for (auto f : inv.facets())
                    lifted = lifted && l.is_facet(l.mask_of(inv.labels_of(f)));
                if (lifted && ! rc.facet)
                    return fail("restriction to the image inverse is not a facet map although its facets are facets of L");
            }
            auto back = find_map(k, k, MapKind::facet, false);
            if (back.found() && ! classify(compose(*r.map, *back.map)).facet)
                return fail("composite of facet maps is not a facet map");
        }

        // bijections: simplicial both ways iff facet both ways
        if (l.vertex_count() == k.vertex_count()) {
            auto bij = random_map(l, k, t.aux ^ 0x55);
            std::vector<std::size_t> perm(l.vertex_count());
            std::iota(perm.begin(), perm.end(), std::size_t{0});
            Rng rng(t.aux);
            for (std::size_t i = perm.size(); i > 1; --i)
                std::swap(perm[i - 1], perm[below(rng, i)]);
            bij.image = perm;
            auto inv = inverse_map(bij);
            auto a = classify(bij), b = classify(inv);
            if ((a.simplicial && b.simplicial) != (a.facet && b.facet))
                return fail("bijection: simplicial both ways differs from facet both ways");
        }
        return pass();
    }

    inline auto check_coloring(const Trial & t, std::size_t) -> CheckResult
    {
        const auto & l = t.get("L");
        const auto & k = t.get("K");
        auto chi = chromatic_number(l);
        if (! is_valid(l, chi.witness))
            return fail("chromatic witness is invalid");
        if (l.vertex_count() <= 6 && chi.value != oracle::brute_force_chromatic(l))
            return fail("chromatic number " + std::to_string(chi.value) + " disagrees with enumeration");
        auto fg = facet_graph(l);
        if (graph_chromatic_number(fg).value > chi.value)
            return fail("chi(G_L) > chi(L)");
        auto gs = strict_chromatic_number(l);
        auto lm = metrics(l);
        if (lm.dim >= 0 && static_cast<std::size_t>(lm.dim) + 1 > gs.value)
            return fail("dim(F)+1 > chi(L*)");
        if (lm.min_facet_size && *lm.min_facet_size >= 2) {
            auto bc = block_coloring(l, gs.witness);
            if (! is_valid(l, bc))
                return fail("block colouring is invalid");
            auto d = *lm.min_facet_size - 1;
            if (chi.value > (gs.value + d - 1) / d)
                return fail("chi(L) > ceil(chi(L*)/d)");
        }
        auto r = find_map(l, k, MapKind::facet, false);
        if (r.found()) {
            auto kc = chromatic_number(k);
            auto pc = pullback_coloring(*r.map, kc.witness);
            if (! is_valid(l, pc))
                return fail("pullback colouring is invalid");
            if (chi.value > kc.value)
                return fail("facet map exists but chi(L) > chi(K)");
        }
        auto core = drop_isolated(l);
        if (core.dim() == 1 && ! core.empty()) {
            auto a = chromatic_number(core).value;
            if (a != graph_chromatic_number(underlying_graph(core)).value || a != graph_chromatic_number(facet_graph(core)).value)
                return fail("1-dimensional complex: chi(L), chi(L*), chi(G_L) differ");
        }
        if (! core.empty() && chromatic_number(core).value != chi.value)
            return fail("isolated vertices change the chromatic number");
        return pass();
    }

    inline auto check_homsearch(const Trial & t, std::size_t) -> CheckResult
    {
        const auto & l = t.get("L");
        const auto & k = t.get("K");
        for (auto kind : {MapKind::facet, MapKind::strict})
            for (bool inj : {false, true}) {
                auto r = find_map(l, k, kind, inj);
                if (! r.found())
                    continue;
                auto c = classify(*r.map);
                if (! oracle::matches(c, kind, inj))
                    return fail("returned map does not classify as " + to_string(kind) + (inj ? " injective" : ""));
                if (kind == MapKind::strict && l.dim() > k.dim())
                    return fail("strict map raises dimension");
                auto ls = metrics(l).min_nonunitary_facet_size;
                auto ks = metrics(k).min_nonunitary_facet_size;
                if (kind == MapKind::facet && ls && (! ks || *ks > *ls))
                    return fail("facet map without a small enough target facet");
            }
        // heredity on a random facet group and a random sub-group
        Rng rng(t.aux);
        auto all = low_bits(l.facet_count());
        Mask s = 0;
        for_each_bit(all, [&](std::size_t i) { s |= chance(rng, 0.6) ? bit(i) : 0; });
        Mask sub = 0;
        for_each_bit(s, [&](std::size_t i) { sub |= chance(rng, 0.5) ? bit(i) : 0; });
        for (auto kind : {MapKind::facet, MapKind::strict})
            for (bool inj : {false, true}) {
                GroupFeasibility gf(l, k, kind, inj);
                if (gf(s) && ! gf(sub))
                    return fail("feasibility is not hereditary");
            }
        // for 1-dimensional complexes without isolated vertices facet maps are graph homomorphisms
        auto lc = drop_isolated(l), kc = drop_isolated(k);
        auto l1 = skeleton(lc, 1), k1 = skeleton(kc, 1);
        if (! l1.empty() && ! k1.empty() && l1.dim() == 1 && k1.dim() == 1 && drop_isolated(l1) == l1 && drop_isolated(k1) == k1) {
            if (exists(l1, k1, MapKind::facet, false) != exists(l1, k1, MapKind::strict, false))
                return fail("1-dimensional facet map existence differs from graph homomorphism existence");
        }
        return pass();
    }

    // -----------------------------------------------------------------------
    // complexity

    inline auto check_c_le_ic(const Trial & t, std::size_t cap) -> CheckResult
    {
        const auto & l = t.get("L");
        const auto & k = t.get("K");
        auto c = C(l, k, cap), ic = IC(l, k, cap);
        if (! c.le(ic))
            return fail("C = " + str(c) + " > IC = " + str(ic));
        auto ics = ICs(l, k, cap);
        if (! ics.le(ic))
            return fail("IC_s = " + str(ics) + " > IC = " + str(ic));
        return pass();
    }

    inline auto check_c_one(const Trial & t, std::size_t cap) -> CheckResult
    {
        const auto & l = t.get("L");
        const auto & k = t.get("K");
        auto c = C(l, k, cap), ic = IC(l, k, cap);
        if ((c == Value::finite(1)) != exists(l, k, MapKind::facet, false))
            return fail("C = " + str(c) + " disagrees with facet map existence");
        if ((ic == Value::finite(1)) != exists(l, k, MapKind::facet, true))
            return fail("IC = " + str(ic) + " disagrees with injective facet map existence");
        return pass();
    }

    inline auto check_triangle(const Trial & t, std::size_t cap) -> CheckResult
    {
        const auto & l = t.get("L");
        const auto & h = t.get("H");
        const auto & k = t.get("K");
        bool any = false;
        for (bool inj : {false, true}) {
            auto lk = value(l, k, MapKind::facet, inj, cap);
            auto lh = value(l, h, MapKind::facet, inj, cap);
            auto hk = value(h, k, MapKind::facet, inj, cap);
            auto kk = value(k, k, MapKind::facet, inj, cap);
            if (kk != Value::finite(1))
                return fail("C(K;K) = " + str(kk));
            if (lk.is_finite() && lh.is_finite() && hk.is_finite()) {
                any = true;
                if (lk.get() > lh.get() * hk.get())
                    return fail(std::string(inj ? "IC" : "C") + "(L;K) = " + str(lk) + " > " + str(lh) + " * " + str(hk));
            }
            else if (lh.is_finite() && hk.is_finite() && ! lk.is_finite())
                return fail(std::string(inj ? "IC" : "C") + "(L;K) infinite although both factors are finite");
            if (lk != product(lk, kk))
                return fail("sharpness with H = K fails");
        }
        return any ? pass() : CheckResult{Outcome::skip, "not all finite"};
    }

    inline auto check_monotone(const Trial & t, std::size_t cap) -> CheckResult
    {
        const auto & l = t.get("L");
        const auto & lp = t.get("L'");
        const auto & h = t.get("H");
        const auto & hp = t.get("H'");
        bool lmap = exists(lp, l, MapKind::facet, false);
        bool hmap = exists(hp, h, MapKind::facet, false);
        if (! lmap && ! hmap)
            return {Outcome::skip, "no facet maps"};
        auto base = C(l, h, cap);
        if (lmap) {
            auto v = C(lp, h, cap);
            if (! v.le(base))
                return fail("C(L';H) = " + str(v) + " > C(L;H) = " + str(base));
        }
        if (hmap) {
            auto v = C(l, hp, cap);
            if (! base.le(v))
                return fail("C(L;H) = " + str(base) + " > C(L;H') = " + str(v));
        }
        return pass();
    }

    inline auto check_iso(const Trial & t, std::size_t cap) -> CheckResult
    {
        const auto & l = t.get("L");
        const auto & k = t.get("K");
        auto l2 = shuffle_labels(l, t.aux, "p");
        auto k2 = shuffle_labels(k, t.aux + 1, "q");
        for (auto kind : {MapKind::facet, MapKind::strict})
            for (bool inj : {false, true}) {
                auto a = value(l, k, kind, inj, cap);
                auto b = value(l2, k, kind, inj, cap);
                auto c = value(l, k2, kind, inj, cap);
                if (a != b || a != c)
                    return fail(query_name({l, k, kind, inj}) + " changes under relabelling: " + str(a) + ", " + str(b) + ", " + str(c));
            }
        return pass();
    }

    inline auto check_subadd(const Trial & t, std::size_t cap) -> CheckResult
    {
        const auto & a = t.get("A");
        const auto & b = t.get("B");
        const auto & h = t.get("H");
        auto l = unite({a, b}, false);
        for (bool inj : {false, true}) {
            auto va = value(a, h, MapKind::facet, inj, cap);
            auto vb = value(b, h, MapKind::facet, inj, cap);
            auto vl = value(l, h, MapKind::facet, inj, cap);
            auto name = std::string(inj ? "IC" : "C");
            if (! max_value(va, vb).le(vl))
                return fail("max{" + name + "(A), " + name + "(B)} = " + str(max_value(va, vb)) + " > " + name + "(L) = " + str(vl));
            if (! vl.le(sum(va, vb)))
                return fail(name + "(L) = " + str(vl) + " > " + str(va) + " + " + str(vb));
        }
        return pass();
    }

    inline auto check_chromatic_lower(const Trial & t, std::size_t cap) -> CheckResult
    {
        const auto & l = t.get("L");
        const auto & k = t.get("K");
        auto c = C(l, k, cap);
        if (! c.is_finite())
            return {Outcome::skip, "C infinite"};
        auto cl = chromatic_number(l).value, ck = chromatic_number(k).value;
        if (! power_at_least(ck, c.get(), cl))
            return fail("chi(L) = " + std::to_string(cl) + " > chi(K)^C = " + std::to_string(ck) + "^" + str(c));
        auto b = bounds({l, k, MapKind::facet, false}, {cap, {}});
        if (b.chromatic_lower && *b.chromatic_lower > c.get())
            return fail("reported chromatic lower bound exceeds C");
        return pass();
    }

    inline auto check_graph_lower(const Trial & t, std::size_t cap) -> CheckResult
    {
        const auto & l = t.get("L");
        const auto & k = t.get("K");
        if (k.isolated() != 0)
            return {Outcome::skip, "target has isolated vertices"};
        auto gl = graph_as_complex(facet_graph(l));
        auto gk = graph_as_complex(facet_graph(k));
        auto lower = C(gl, gk, cap);
        auto c = C(l, k, cap);
        if (! lower.le(c))
            return fail("C(G_L;G_K) = " + str(lower) + " > C(L;K) = " + str(c));
        return pass();
    }

    inline auto check_eta(const Trial & t, std::size_t cap) -> CheckResult
    {
        const auto & l = t.get("L");
        const auto & k = t.get("K");
        auto c = C(l, k, cap);
        auto km = metrics(k);
        bool finite = ! k.empty();
        for (auto f : l.non_unitary_facets())
            finite = finite && km.min_nonunitary_facet_size && popcount(f) >= *km.min_nonunitary_facet_size;
        if (finite != c.is_finite())
            return fail("C = " + str(c) + " but the facet-size dichotomy says " + (finite ? "finite" : "infinite"));
        if (c.is_finite() && c.get() > std::max<std::size_t>(1, l.facet_count()))
            return fail("C = " + str(c) + " > eta(L) = " + std::to_string(l.facet_count()));
        auto b = bounds({l, k, MapKind::facet, false}, {cap, {}});
        if (b.finite != c.is_finite() || ! c.le(b.eta_upper))
            return fail("bound report disagrees with C = " + str(c));
        return pass();
    }

    inline auto check_complete(const Trial & t, std::size_t cap) -> CheckResult
    {
        const auto & l = t.get("L");
        const auto & k = t.get("K");
        auto ic = IC(l, k, cap);
        auto eta = l.facet_count();
        if (l.isolated() == 0 && ! Value::finite(eta).le(ic))
            return fail("eta(L) = " + std::to_string(eta) + " > IC = " + str(ic));
        auto lm = metrics(l);
        if (lm.pure && lm.dim == k.dim() && ic != Value::finite(eta))
            return fail("pure source of the target's dimension: IC = " + str(ic) + " != eta(L) = " + std::to_string(eta));
        auto b = bounds({l, k, MapKind::facet, true}, {cap, {}});
        if (b.complete_target_ic && Value::finite(*b.complete_target_ic) != ic)
            return fail("reported complete-target IC disagrees");
        return pass();
    }

    /// C_s(L;K) >= C_s(L^(q);K^(q)) >= ... >= C_s(L^(2);K^(2)) >= C(L*;K*), and the IC chain.
    inline auto check_skeleton_chain(const Trial & t, std::size_t cap) -> CheckResult
    {
        const auto & l = t.get("L");
        const auto & k = t.get("K");
        for (bool inj : {false, true}) {
            std::vector<Value> chain;
            for (auto q = std::max(l.dim(), 2); q >= 2; --q)
                chain.push_back(value(skeleton(l, static_cast<std::size_t>(q)), skeleton(k, static_cast<std::size_t>(q)),
                    MapKind::strict, inj, cap));
            chain.push_back(value(skeleton(l, 1), skeleton(k, 1), MapKind::facet, inj, cap));
            for (std::size_t i = 1; i < chain.size(); ++i)
                if (! chain[i].le(chain[i - 1]))
                    return fail(std::string(inj ? "IC" : "C") + " skeleton chain increases: " + str(chain[i - 1]) + " then " + str(chain[i]));
        }
        return pass();
    }

    /// The equalities claimed for complete targets Gamma_n and, when
    /// dim(L) <= n-2, for the boundary targets K_n.
    inline auto check_skeleton_eq(const Trial & t, std::size_t cap) -> CheckResult
    {
        const auto & l = t.get("L");
        auto n = t.get("K").vertex_count();
        auto lstar = skeleton(l, 1);
        auto kn = graph_as_complex(complete_graph(n));
        for (bool inj : {false, true}) {
            auto graph = value(lstar, kn, MapKind::facet, inj, cap);
            auto name = std::string(inj ? "IC" : "C");
            auto g = gamma(n);
            for (auto q = std::max(l.dim(), 2); q >= 2; --q) {
                auto qs = static_cast<std::size_t>(q);
                auto v = value(skeleton(l, qs), skeleton(g, qs), MapKind::strict, inj, cap);
                if (v != graph)
                    return fail(name + "_s(L^(" + std::to_string(q) + ");Gamma_" + std::to_string(n) + "^(" + std::to_string(q) +
                        ")) = " + str(v) + " but " + name + "(L*;K_" + std::to_string(n) + ") = " + str(graph));
            }
            if (n >= 2 && l.dim() <= static_cast<int>(n) - 2) {
                auto b = boundary(n);
                for (auto q = std::max(l.dim(), 2); q >= 2; --q) {
                    auto qs = static_cast<std::size_t>(q);
                    auto v = value(skeleton(l, qs), skeleton(b, qs), MapKind::strict, inj, cap);
                    if (v != graph)
                        return fail(name + "_s(L^(" + std::to_string(q) + ");K_" + std::to_string(n) + "^(" + std::to_string(q) +
                            ")) = " + str(v) + " but " + name + "(L*;K_" + std::to_string(n) + ") = " + str(graph));
                }
            }
        }
        return pass();
    }

    /// What does hold for Gamma_n: a graph homomorphism L* -> K_n is the
    /// same thing as a strict map L -> Gamma_n, so the values agree at 1.
    inline auto check_skeleton_exist(const Trial & t, std::size_t) -> CheckResult
    {
        const auto & l = t.get("L");
        auto n = t.get("K").vertex_count();
        auto kn = graph_as_complex(complete_graph(n));
        auto lstar = skeleton(l, 1);
        for (bool inj : {false, true}) {
            bool graph = exists(lstar, kn, MapKind::facet, inj);
            bool strict = exists(l, gamma(n), MapKind::strict, inj);
            if (graph != strict)
                return fail(std::string("strict map into Gamma_") + std::to_string(n) + (strict ? " exists" : " is missing") +
                    " while the graph homomorphism " + (graph ? "exists" : "is missing"));
            if (n >= 3 && l.dim() <= static_cast<int>(n) - 2) {
                bool bnd = exists(l, boundary(n), MapKind::strict, inj);
                if (graph != bnd)
                    return fail("strict map into K_" + std::to_string(n) + " and graph homomorphism disagree");
            }
        }
        return pass();
    }

    inline auto check_isolated(const Trial & t, std::size_t cap) -> CheckResult
    {
        const auto & l = t.get("L");
        const auto & k = t.get("K");
        auto extra = unite({l, Complex::from_faces({{"iso"}})}, true);
        for (auto kind : {MapKind::facet, MapKind::strict}) {
            auto a = value(l, k, kind, false, cap), b = value(extra, k, kind, false, cap);
            if (a != b)
                return fail("adding an isolated vertex changes " + query_name({l, k, kind, false}) + ": " + str(a) + " -> " + str(b));
        }
        return pass();
    }

    inline auto check_disjoint(const Trial & t, std::size_t cap) -> CheckResult
    {
        const auto & a = t.get("A");
        const auto & b = t.get("B");
        const auto & h = t.get("H");
        auto l = unite({a, b}, true);
        auto whole = C(l, h, cap);
        auto split = disjoint_decompose({l, h, MapKind::facet, false}, {cap, {}});
        auto parts = max_value(C(a, h, cap), C(b, h, cap));
        if (whole != split || whole != parts)
            return fail("C(A+B) = " + str(whole) + ", decomposed " + str(split) + ", max of parts " + str(parts));
        return pass();
    }

    inline auto check_oracle(const Trial & t, std::size_t) -> CheckResult
    {
        const auto & l = t.get("L");
        const auto & k = t.get("K");
        oracle::OracleLimits lim;
        if (l.vertex_count() > lim.max_source_vertices || k.vertex_count() > lim.max_target_vertices)
            return {Outcome::skip, "outside oracle limits"};
        for (auto kind : {MapKind::facet, MapKind::strict})
            for (bool inj : {false, true}) {
                auto fast = find_map(l, k, kind, inj).found();
                auto slow = oracle::brute_force_map_search(l, k, kind, inj, lim).found;
                if (fast != slow)
                    return fail("find_map " + to_string(kind) + (inj ? " injective" : "") + " disagrees with enumeration");
                if (l.facet_count() <= lim.max_facets) {
                    ComplexityQuery q{l, k, kind, inj};
                    auto v = compute(q).value;
                    auto o = oracle::brute_force_cover_complexity(q, lim);
                    if (v != o.canonical)
                        return fail(query_name(q) + " = " + str(v) + " but enumeration gives " + str(o.canonical));
                    if (o.arbitrary && v != *o.arbitrary)
                        return fail(query_name(q) + " = " + str(v) + " but arbitrary covers give " + str(*o.arbitrary));
                }
            }
        if (chromatic_number(l).value != oracle::brute_force_chromatic(l))
            return fail("chromatic number disagrees with enumeration");
        return pass();
    }

    // -----------------------------------------------------------------------
    // generators

    inline auto make_pair_trial(Rng & rng, const VerifyConfig & cfg) -> Trial { return pair_trial(rng, cfg); }

    inline auto make_triple(Rng & rng, const VerifyConfig & cfg) -> Trial
    {
        auto l = source(rng, cfg, 6);
        VerifyConfig mid = cfg;
        mid.max_vertices = std::min<std::size_t>(cfg.max_vertices, 5);
        auto h = sample(rng, between(rng, 2, mid.max_vertices), 4, cfg.max_facet_size, "h");
        auto k = target(rng, cfg);
        return Trial{{{"L", l}, {"H", h}, {"K", k}}, rng()};
    }

    inline auto random_facet_subcomplex(Rng & rng, const Complex & c) -> Complex
    {
        std::vector<Mask> fs;
        for (auto f : c.facets())
            if (chance(rng, 0.6))
                fs.push_back(f);
        if (fs.empty())
            fs.push_back(c.facets()[below(rng, c.facet_count())]);
        return closure(c, fs);
    }

    inline auto make_monotone(Rng & rng, const VerifyConfig & cfg) -> Trial
    {
        auto l = source(rng, cfg);
        auto h = target(rng, cfg);
        auto lp = shuffle_labels(random_facet_subcomplex(rng, l), rng(), "s");
        auto hp = random_facet_subcomplex(rng, h);
        return Trial{{{"L", l}, {"L'", lp}, {"H", h}, {"H'", hp}}, rng()};
    }

    inline auto make_subadd(Rng & rng, const VerifyConfig & cfg) -> Trial
    {
        auto l = source(rng, cfg, 6);
        std::vector<Mask> a, b;
        for (auto f : l.facets()) {
            auto r = below(rng, 3);
            if (r != 1)
                a.push_back(f);
            if (r != 0)
                b.push_back(f);
        }
        if (a.empty())
            a.push_back(l.facets()[0]);
        if (b.empty())
            b.push_back(l.facets()[l.facet_count() - 1]);
        return Trial{{{"A", closure(l, a)}, {"B", closure(l, b)}, {"H", target(rng, cfg)}}, rng()};
    }

    inline auto make_complete(Rng & rng, const VerifyConfig & cfg) -> Trial
    {
        auto n = between(rng, 2, cfg.max_target_vertices);
        Complex l;
        if (chance(rng, 0.5)) {
            // pure of the target's dimension
            auto nv = between(rng, n, cfg.max_vertices);
            l = sample(rng, nv, 5, n, "");
            std::vector<Mask> keep;
            for (auto f : l.facets())
                if (popcount(f) == n)
                    keep.push_back(f);
            l = keep.empty() ? Complex() : closure(l, keep);
        }
        else
            l = drop_isolated(source(rng, cfg));
        if (l.empty())
            l = gamma(n);
        return Trial{{{"L", l}, {"K", gamma(n)}}, rng()};
    }

    inline auto make_skeleton(Rng & rng, const VerifyConfig & cfg) -> Trial
    {
        auto l = source(rng, cfg, 6);
        auto k = target(rng, cfg);
        return Trial{{{"L", l}, {"K", k}}, rng()};
    }

    inline auto make_disjoint(Rng & rng, const VerifyConfig & cfg) -> Trial
    {
        auto a = sample(rng, between(rng, 2, 4), 3, cfg.max_facet_size, "a");
        auto b = sample(rng, between(rng, 2, 4), 3, cfg.max_facet_size, "b");
        return Trial{{{"A", a}, {"B", b}, {"H", target(rng, cfg)}}, rng()};
    }

    inline auto make_oracle(Rng & rng, const VerifyConfig & cfg) -> Trial
    {
        auto n = between(rng, 2, 5);
        auto l = sample(rng, n, 4, std::min<std::size_t>(cfg.max_facet_size, 4), "");
        auto m = between(rng, 1, 4);
        auto k = m >= 2 && chance(rng, 0.3) ? gamma(m) : sample(rng, m, 3, 4, "t");
        return Trial{{{"L", l}, {"K", k}}, rng()};
    }

} // namespace verify_detail

inline auto suites() -> const std::vector<Suite> &
{
    using namespace verify_detail;
    static const std::vector<Suite> all = {
        {"core", "antichain, round trips, degrees, skeletons, unions", make_pair_trial, check_core},
        {"maps", "classification lattice, degree lemma, facet lifting, bijections", make_pair_trial, check_maps},
        {"coloring", "chromatic bounds and colouring constructions", make_pair_trial, check_coloring},
        {"homsearch", "soundness, heredity, necessary conditions", make_pair_trial, check_homsearch},
        {"c-le-ic", "C <= IC and IC_s <= IC", make_pair_trial, check_c_le_ic},
        {"c-one", "C = 1 iff a facet map exists (and IC)", make_pair_trial, check_c_one},
        {"triangle", "C(L;K) <= C(L;H) C(H;K), sharp for H = K", make_triple, check_triangle},
        {"monotone", "monotonicity under facet maps", make_monotone, check_monotone},
        {"subadd", "max{C(A),C(B)} <= C(A u B) <= C(A) + C(B)", make_subadd, check_subadd},
        {"chromatic-lower", "chi(L) <= chi(K)^C", make_pair_trial, check_chromatic_lower},
        {"graph-lower", "C(G_L;G_K) <= C(L;K)", make_pair_trial, check_graph_lower},
        {"eta", "C <= eta(L) and the facet-size dichotomy", make_pair_trial, check_eta},
        {"iso", "invariance under relabelling", make_pair_trial, check_iso},
        {"complete", "eta(L) <= IC(L;Gamma_n), equality for pure L", make_complete, check_complete},
        {"skeleton-chain", "skeleton chains are non-increasing", make_skeleton, check_skeleton_chain},
        {"skeleton-eq", "skeleton chains are equalities for Gamma_n and K_n", make_skeleton, check_skeleton_eq},
        {"skeleton-exist", "strict maps into Gamma_n are graph homomorphisms into K_n", make_skeleton, check_skeleton_exist},
        {"isolated", "C and C_s ignore isolated vertices", make_pair_trial, check_isolated},
        {"disjoint", "C of a disjoint union is the max over components", make_disjoint, check_disjoint},
        {"oracle", "solvers agree with enumeration", make_oracle, check_oracle},
    };
    return all;
}

inline auto find_suite(const std::string & name) -> const Suite &
{
    for (const auto & s : suites())
        if (s.name == name)
            return s;
    throw Error("unknown property suite '" + name + "'");
}

/// Runs one check, turning skips and errors into outcomes.
inline auto run_check(const Suite & s, const Trial & t, std::size_t cap) -> CheckResult
{
    try {
        return s.check(t, cap);
    }
    catch (const verify_detail::Skip &) {
        return {Outcome::skip, "over the facet cap"};
    }
    catch (const Error & e) {
        return {Outcome::fail, std::string("error: ") + e.what()};
    }
}

inline auto trial_for(const Suite & s, const VerifyConfig & cfg, std::size_t index) -> Trial
{
    Rng rng(split_seed(cfg.seed ^ verify_detail::name_hash(s.name), index));
    return s.make(rng, cfg);
}

inline auto make_bundle(const Suite & s, const Trial & t, std::size_t index, const VerifyConfig & cfg, const std::string & msg)
    -> std::string
{
    Bundle b;
    b.header.push_back("# counterexample: " + msg);
    b.header.push_back("# seed " + std::to_string(cfg.seed) + ", trial " + std::to_string(index));
    b.header.push_back("suite " + s.name);
    b.header.push_back("aux " + std::to_string(t.aux));
    for (const auto & p : t.parts)
        b.parts.push_back(p);
    return serialize_bundle(b);
}

/// Re-runs the check recorded in a counterexample bundle.
inline auto replay(std::string_view bundle_text, std::size_t facet_cap = 20) -> CheckResult
{
    auto b = parse_bundle(bundle_text);
    std::string suite;
    Trial t;
    for (const auto & h : b.header) {
        std::istringstream in(h);
        std::string key;
        in >> key;
        if (key == "suite")
            in >> suite;
        else if (key == "aux")
            in >> t.aux;
    }
    if (suite.empty())
        throw Error("bundle names no suite");
    t.parts = b.parts;
    return run_check(find_suite(suite), t, facet_cap);
}

namespace verify_detail {

    struct FixtureCheck {
        std::string what;
        std::string expected;
        std::function<std::string()> actual;
    };

    inline auto fixture_checks() -> std::vector<FixtureCheck>
    {
        using namespace fixtures;
        auto v = [](const Complex & l, const Complex & k, MapKind kind, bool inj) {
            return compute({l, k, kind, inj}).value.to_string();
        };
        return {
            {"chi(EX_L)", "3", [] { return std::to_string(chromatic_number(ex_l()).value); }},
            {"chi(EX_K)", "2", [] { return std::to_string(chromatic_number(ex_k()).value); }},
            {"facet map EX_L -> EX_K", "none", [] { return find_map(ex_l(), ex_k(), MapKind::facet).found() ? "found" : "none"; }},
            {"facet map L_1 -> EX_K", "found", [] { return find_map(l1(), ex_k(), MapKind::facet).found() ? "found" : "none"; }},
            {"C(EX_L;EX_K)", "2", [=] { return v(ex_l(), ex_k(), MapKind::facet, false); }},
            {"IC(EX_L;EX_K)", "3", [=] { return v(ex_l(), ex_k(), MapKind::facet, true); }},
            {"C(EX_L*;EX_K*)", "1", [=] { return v(skeleton(ex_l(), 1), skeleton(ex_k(), 1), MapKind::facet, false); }},
            {"IC(K_3+*;K_3)", "2", [=] { return v(k3_star(), boundary(3), MapKind::facet, true); }},
            {"IC(K_3;K_3)", "1", [=] { return v(boundary(3), boundary(3), MapKind::facet, true); }},
            {"C(A u B;Gamma_2)", "2", [=] { return v(unite({a(), b()}, false), gamma(2), MapKind::facet, false); }},
            {"C(A;Gamma_2)", "1", [=] { return v(a(), gamma(2), MapKind::facet, false); }},
            {"C(B;Gamma_2)", "1", [=] { return v(b(), gamma(2), MapKind::facet, false); }},
            {"ceil(chi(EX_L*)/dim(EX_L))", "2", [] {
                 auto s = strict_chromatic_number(ex_l()).value;
                 auto d = static_cast<std::size_t>(ex_l().dim());
                 return std::to_string((s + d - 1) / d);
             }},
            {"f_1 is a facet map", "yes", [] { return classify(f1()).facet ? "yes" : "no"; }},
            {"g is strict, not facet", "yes", [] {
                 auto c = classify(g());
                 return c.strict && ! c.facet ? "yes" : "no";
             }},
        };
    }

    /// Searches for pairs where the skeleton chain is strict somewhere.
    inline auto observe_skeleton_chains(const VerifyConfig & cfg) -> std::vector<std::string>
    {
        std::size_t looked = 0, strict_c = 0, strict_ic = 0;
        std::optional<std::string> first_c, first_ic;
        for (std::size_t i = 0; i < cfg.trials; ++i) {
            Rng rng(split_seed(cfg.seed ^ name_hash("observations"), i));
            auto t = make_skeleton(rng, cfg);
            const auto & l = t.get("L");
            const auto & k = t.get("K");
            try {
                auto cs = Cs(l, k, cfg.facet_cap);
                auto cg = C(skeleton(l, 1), skeleton(k, 1), cfg.facet_cap);
                auto ics = ICs(l, k, cfg.facet_cap);
                auto icg = IC(skeleton(l, 1), skeleton(k, 1), cfg.facet_cap);
                ++looked;
                if (cs != cg) {
                    ++strict_c;
                    if (! first_c)
                        first_c = "trial " + std::to_string(i) + ": C_s = " + str(cs) + ", C(L*;K*) = " + str(cg);
                }
                if (ics != icg) {
                    ++strict_ic;
                    if (! first_ic)
                        first_ic = "trial " + std::to_string(i) + ": IC_s = " + str(ics) + ", IC(L*;K*) = " + str(icg);
                }
            }
            catch (const Skip &) {
            }
        }
        std::vector<std::string> out;
        out.push_back("skeleton chains: " + std::to_string(looked) + " pairs examined");
        out.push_back("  C_s(L;K) > C(L*;K*) in " + std::to_string(strict_c) + (first_c ? " (first " + *first_c + ")" : ""));
        out.push_back("  IC_s(L;K) > IC(L*;K*) in " + std::to_string(strict_ic) + (first_ic ? " (first " + *first_ic + ")" : ""));
        return out;
    }

} // namespace verify_detail

inline auto verify(const VerifyConfig & cfg) -> VerifyReport
{
    if (cfg.trials < 1 && ! (cfg.fixtures && cfg.properties.empty() && cfg.trials == 0))
        throw Error("verify needs at least one trial");
    if (cfg.max_facet_size < 2)
        throw Error("max_facet_size must be at least 2");
    if (cfg.max_vertices < 2 || cfg.max_target_vertices < 2)
        throw Error("vertex bounds must be at least 2");

    VerifyReport rep;
    std::ostringstream out;
    out << "verify seed " << cfg.seed << ", " << cfg.trials << " trials, sources <= " << cfg.max_vertices
        << " vertices with faces <= " << cfg.max_facet_size << ", targets <= " << cfg.max_target_vertices
        << " vertices, facet cap " << cfg.facet_cap << "\n";

    if (cfg.fixtures) {
        out << "fixtures\n";
        for (const auto & f : verify_detail::fixture_checks()) {
            std::string got;
            try {
                got = f.actual();
            }
            catch (const Error & e) {
                got = std::string("error: ") + e.what();
            }
            bool ok = got == f.expected;
            if (! ok)
                ++rep.fixture_failures;
            auto line = std::string(ok ? "  ok   " : "  FAIL ") + f.what + " = " + got + (ok ? "" : " (expected " + f.expected + ")");
            rep.fixture_lines.push_back(line);
            out << line << "\n";
        }
    }

    std::vector<const Suite *> chosen;
    if (cfg.properties.empty()) {
        if (cfg.trials > 0)
            for (const auto & s : suites())
                chosen.push_back(&s);
    }
    else
        for (const auto & name : cfg.properties)
            chosen.push_back(&find_suite(name));

    if (! chosen.empty())
        out << "properties\n";
    for (const auto * s : chosen) {
        SuiteReport sr;
        sr.name = s->name;
        for (std::size_t i = 0; i < cfg.trials; ++i) {
            auto t = trial_for(*s, cfg, i);
            auto r = run_check(*s, t, cfg.facet_cap);
            switch (r.outcome) {
            case Outcome::pass: ++sr.passed; break;
            case Outcome::skip: ++sr.skipped; break;
            case Outcome::fail:
                ++sr.failed;
                if (! sr.first_failure) {
                    sr.first_failure = i;
                    sr.message = r.message;
                    sr.bundle = make_bundle(*s, t, i, cfg, r.message);
                    if (! cfg.bundle_dir.empty()) {
                        std::filesystem::create_directories(cfg.bundle_dir);
                        auto path = std::filesystem::path(cfg.bundle_dir) / (s->name + "-trial" + std::to_string(i) + ".scx");
                        std::ofstream(path) << sr.bundle;
                        sr.bundle_path = path.string();
                    }
                }
                break;
            }
        }
        out << "  " << (sr.failed ? "FAIL " : "ok   ") << s->name << ": " << sr.passed << " passed, " << sr.skipped
            << " skipped, " << sr.failed << " failed\n";
        if (sr.first_failure) {
            out << "       first failure at trial " << *sr.first_failure << ": " << sr.message << "\n";
            if (! sr.bundle_path.empty())
                out << "       counterexample written to " << sr.bundle_path << "\n";
        }
        rep.suites.push_back(std::move(sr));
    }

    if (cfg.observations && cfg.trials > 0 &&
        (cfg.properties.empty() ||
            std::find(cfg.properties.begin(), cfg.properties.end(), "skeleton-chain") != cfg.properties.end())) {
        rep.observations = verify_detail::observe_skeleton_chains(cfg);
        out << "observations (not asserted)\n";
        for (const auto & o : rep.observations)
            out << "  " << o << "\n";
    }
    out << (rep.ok() ? "result: all checks passed\n" : "result: violations found\n");
    rep.text = out.str();
    return rep;
}

} // namespace facetcx

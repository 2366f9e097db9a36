#pragma once

// Command-line front end. run() takes the arguments after the program name
// and writes to the given streams, so tests can drive it directly.
//
// Exit codes: 0 success, 2 usage or input error, 3 no map exists,
// 4 undecided (search budget), 5 property violation.

#include <facetcx/facetcx.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace facetcx::cli {

using json = nlohmann::ordered_json;

enum Exit { ok = 0, usage = 2, no_map = 3, undecided = 4, violation = 5 };

inline auto read_file(const std::string & path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw Error("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline auto load(const std::string & path) -> Complex
{
    try {
        auto c = parse_scx(read_file(path));
        if (c.name().empty()) {
            auto stem = std::filesystem::path(path).stem().string();
            c = c.with_name(stem);
        }
        return c;
    }
    catch (const ParseError & e) {
        throw Error(path + ": " + e.what());
    }
}

inline void write_text(const std::string & path, const std::string & text, std::ostream & out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (! f)
        throw Error("cannot write '" + path + "'");
    f << text;
}

inline auto value_json(const Value & v) -> json
{
    if (v.is_finite())
        return v.get();
    return v.to_string();
}

inline auto face_json(const Complex & c, Mask f) -> json
{
    json a = json::array();
    for (const auto & l : c.labels_of(f))
        a.push_back(l);
    return a;
}

inline auto map_json(const VertexMap & m) -> json
{
    json o = json::object();
    for (std::size_t i = 0; i < m.image.size(); ++i)
        o[m.source.label(i)] = m.target.label(m.image[i]);
    return o;
}

inline auto coloring_json(const Coloring & c) -> json
{
    json o = json::object();
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
        o[c.vertices[i]] = c.color[i];
    return o;
}

/// Facets of a group as {abc, cd}; multi-character labels are spaced: {x1 x2, x3 x4}.
inline auto faces_text(const Complex & c, Mask group) -> std::string
{
    bool short_labels = std::all_of(c.vertices().begin(), c.vertices().end(), [](const std::string & v) { return v.size() == 1; });
    std::string s;
    for_each_bit(group, [&](std::size_t i) {
        if (! s.empty())
            s += ", ";
        std::string f;
        for (const auto & l : c.labels_of(c.facets()[i]))
            f += (f.empty() || short_labels ? "" : " ") + l;
        s += f;
    });
    return "{" + s + "}";
}

inline auto bounds_json(const BoundReport & b) -> json
{
    json o = json::object();
    o["chromatic_lower"] = b.chromatic_lower ? json(*b.chromatic_lower) : json(nullptr);
    o["graph_lower"] = b.graph_lower ? value_json(*b.graph_lower) : json(nullptr);
    o["eta_upper"] = value_json(b.eta_upper);
    o["finite"] = b.finite;
    o["complete_target_ic"] = b.complete_target_ic ? json(*b.complete_target_ic) : json(nullptr);
    o["exact"] = b.exact ? value_json(*b.exact) : json(nullptr);
    return o;
}

inline void print_bounds(const BoundReport & b, std::ostream & out)
{
    out << "chromatic lower bound: " << (b.chromatic_lower ? std::to_string(*b.chromatic_lower) : "-") << "\n";
    out << "facet-graph lower bound: " << (b.graph_lower ? b.graph_lower->to_string() : "-") << "\n";
    out << "facet-count upper bound: " << b.eta_upper.to_string() << "\n";
    out << "finite: " << (b.finite ? "yes" : "no") << "\n";
    if (b.complete_target_ic)
        out << "complete target IC: " << *b.complete_target_ic << "\n";
    if (b.exact)
        out << "exact: " << b.exact->to_string() << "\n";
}

inline auto kind_of(const std::string & s) -> MapKind
{
    if (s == "facet")
        return MapKind::facet;
    if (s == "strict")
        return MapKind::strict;
    throw Error("--kind must be facet or strict");
}

inline auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Facet-complexity of simplicial complexes", "facetcx"};
    app.require_subcommand(1);

    bool as_json = false;
    std::string l_path, k_path, kind = "facet", out_path, file;
    bool injective = false, strict = false, bounds_only = false;
    std::size_t facet_cap = 20;
    std::uint64_t max_nodes = 0;
    double timeout = 0;

    auto add_limits = [&](CLI::App * c) {
        c->add_option("--max-nodes", max_nodes, "search node budget (0 = unlimited)");
        c->add_option("--timeout", timeout, "search time budget in seconds (0 = unlimited)");
    };
    auto limits = [&] {
        SearchLimits l;
        if (max_nodes > 0)
            l.nodes = max_nodes;
        if (timeout > 0)
            l.seconds = timeout;
        return l;
    };

    auto * info = app.add_subcommand("info", "Summary of a complex");
    info->add_option("file", file, ".scx file")->required();
    info->add_flag("--json", as_json);

    bool graph = false, strict_chi = false, facet_graph_chi = false;
    auto * chromatic = app.add_subcommand("chromatic", "Chromatic number with a witness colouring");
    chromatic->add_option("file", file, ".scx file")->required();
    auto * g1 = chromatic->add_flag("--graph", graph, "chromatic number of the underlying graph");
    auto * g2 = chromatic->add_flag("--strict-chromatic", strict_chi, "strict chromatic number (same value as --graph)");
    auto * g3 = chromatic->add_flag("--facet-graph", facet_graph_chi, "chromatic number of the facet graph");
    g1->excludes(g2)->excludes(g3);
    g2->excludes(g3);
    chromatic->add_flag("--json", as_json);

    auto * mapcheck = app.add_subcommand("map-check", "Search for a facet or strict map");
    mapcheck->add_option("source", l_path)->required();
    mapcheck->add_option("target", k_path)->required();
    mapcheck->add_option("--kind", kind, "facet or strict")->check(CLI::IsMember({"facet", "strict"}));
    mapcheck->add_flag("--injective", injective);
    mapcheck->add_flag("--json", as_json);
    add_limits(mapcheck);

    auto * complexity = app.add_subcommand("complexity", "Exact C, IC, C_s or IC_s with a certificate cover");
    complexity->add_option("source", l_path)->required();
    complexity->add_option("target", k_path)->required();
    complexity->add_flag("--injective", injective);
    complexity->add_flag("--strict", strict);
    complexity->add_flag("--bounds-only", bounds_only, "skip the exact computation");
    complexity->add_option("--facet-cap", facet_cap, "largest number of facets to cover exactly");
    complexity->add_flag("--json", as_json);
    add_limits(complexity);

    auto * bnds = app.add_subcommand("bounds", "Bounds from chromatic numbers, facet graphs and facet counts");
    bnds->add_option("source", l_path)->required();
    bnds->add_option("target", k_path)->required();
    bnds->add_flag("--injective", injective);
    bnds->add_flag("--strict", strict);
    bnds->add_option("--facet-cap", facet_cap);
    bnds->add_flag("--json", as_json);

    std::string gen_kind;
    std::size_t n = 0, max_size = 3;
    double density = 0.5;
    std::optional<std::uint64_t> seed;
    auto * gen = app.add_subcommand("gen", "Generate Gamma_n, K_n or a random complex");
    gen->add_option("kind", gen_kind, "gamma, kn or random")->required()->check(CLI::IsMember({"gamma", "kn", "random"}));
    gen->add_option("n", n, "number of vertices")->required();
    gen->add_option("--max-facet-size", max_size);
    gen->add_option("--density", density);
    gen->add_option("--seed", seed);
    gen->add_option("-o,--output", out_path);

    std::size_t q = 1;
    auto * skel = app.add_subcommand("skeleton", "q-skeleton of a complex");
    skel->add_option("file", file)->required();
    skel->add_option("q", q)->required();
    skel->add_option("-o,--output", out_path);

    VerifyConfig vc;
    std::vector<std::string> props;
    bool fixtures_only = false, no_fixtures = false;
    std::string replay_path;
    auto * ver = app.add_subcommand("verify", "Seeded property checks and the worked examples");
    ver->add_option("--seed", vc.seed);
    ver->add_option("--trials", vc.trials);
    ver->add_option("--max-vertices", vc.max_vertices);
    ver->add_option("--max-facet-size", vc.max_facet_size);
    ver->add_option("--property", props, "suite to run (repeatable)");
    ver->add_flag("--fixtures-only", fixtures_only);
    ver->add_flag("--no-fixtures", no_fixtures);
    ver->add_option("--bundle-dir", vc.bundle_dir, "directory for counterexample bundles");
    ver->add_option("--replay", replay_path, "re-run the check recorded in a bundle");
    ver->add_flag("--list", [&](std::int64_t) {
        for (const auto & s : suites())
            out << s.name << "  " << s.description << "\n";
        throw CLI::Success();
    });
    ver->add_flag("--json", as_json);

    auto * orc = app.add_subcommand("oracle", "Brute-force reference computations");
    orc->require_subcommand(1);
    auto * omap = orc->add_subcommand("map", "enumerate all vertex maps");
    omap->add_option("source", l_path)->required();
    omap->add_option("target", k_path)->required();
    omap->add_option("--kind", kind)->check(CLI::IsMember({"facet", "strict"}));
    omap->add_flag("--injective", injective);
    omap->add_flag("--json", as_json);
    auto * ocx = orc->add_subcommand("complexity", "enumerate covers");
    ocx->add_option("source", l_path)->required();
    ocx->add_option("target", k_path)->required();
    ocx->add_flag("--injective", injective);
    ocx->add_flag("--strict", strict);
    ocx->add_flag("--json", as_json);
    auto * ochi = orc->add_subcommand("chromatic", "enumerate colourings");
    ochi->add_option("file", file)->required();
    ochi->add_flag("--json", as_json);

    if (! args.empty() && ! args[0].empty() && args[0][0] != '-') {
        auto subs = app.get_subcommands([](CLI::App *) { return true; });
        bool known = std::any_of(subs.begin(), subs.end(), [&](CLI::App * s) { return s->get_name() == args[0]; });
        if (! known) {
            err << "error: unknown subcommand '" << args[0] << "'\n" << app.help();
            return usage;
        }
    }
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return ok;
    }
    catch (const CLI::Success &) {
        return ok;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << "\n" << app.help();
        return usage;
    }

    try {
        if (info->parsed()) {
            auto c = load(file);
            auto m = metrics(c);
            if (as_json) {
                json j;
                j["schema"] = 1;
                j["name"] = c.name();
                j["vertices"] = c.vertices();
                json fs = json::array();
                for (auto f : c.facets())
                    fs.push_back(face_json(c, f));
                j["facets"] = fs;
                j["dim"] = m.dim;
                j["eta"] = m.eta;
                j["pure"] = m.pure;
                j["isolated"] = c.labels_of(m.isolated);
                j["min_facet_size"] = m.min_facet_size ? json(*m.min_facet_size) : json(nullptr);
                j["min_nonunitary_facet_size"] = m.min_nonunitary_facet_size ? json(*m.min_nonunitary_facet_size) : json(nullptr);
                out << j.dump(2) << "\n";
            }
            else {
                out << "name " << c.name() << "\n";
                out << "vertices " << c.vertex_count() << "\n";
                out << "dim " << m.dim << "\n";
                out << "eta " << m.eta << "\n";
                out << "pure " << (m.pure ? "yes" : "no") << "\n";
                out << "isolated " << popcount(m.isolated) << "\n";
                out << serialize_scx(c);
            }
            return ok;
        }

        if (chromatic->parsed()) {
            auto c = load(file);
            ChromaticResult r;
            std::string label = "chi";
            if (graph) {
                r = graph_chromatic_number(underlying_graph(c));
                label = "chi_graph";
            }
            else if (strict_chi) {
                r = strict_chromatic_number(c);
                label = "chi_s";
            }
            else if (facet_graph_chi) {
                r = graph_chromatic_number(facet_graph(c));
                label = "chi_facet_graph";
            }
            else
                r = chromatic_number(c);
            if (as_json) {
                json j;
                j["schema"] = 1;
                j["measure"] = label;
                j["chi"] = r.value;
                j["witness"] = coloring_json(r.witness);
                out << j.dump(2) << "\n";
            }
            else {
                out << label << " " << r.value << "\n";
                for (std::size_t i = 0; i < r.witness.vertices.size(); ++i)
                    out << "color " << r.witness.vertices[i] << " " << r.witness.color[i] << "\n";
            }
            return ok;
        }

        if (mapcheck->parsed()) {
            auto l = load(l_path), k = load(k_path);
            auto r = find_map(SearchProblem{l, k, kind_of(kind), injective, limits()});
            if (as_json) {
                json j;
                j["schema"] = 1;
                j["kind"] = kind;
                j["injective"] = injective;
                j["status"] = r.status == SearchStatus::found ? "found" : r.status == SearchStatus::none ? "none" : "undecided";
                j["nodes"] = r.nodes;
                j["map"] = r.map ? map_json(*r.map) : json(nullptr);
                out << j.dump(2) << "\n";
            }
            else if (r.status == SearchStatus::found)
                out << "FOUND\n" << serialize_map(*r.map);
            else if (r.status == SearchStatus::none)
                out << "NONE\n";
            else
                out << "UNDECIDED after " << r.nodes << " nodes\n";
            return r.status == SearchStatus::found ? ok : r.status == SearchStatus::none ? no_map : undecided;
        }

        if (complexity->parsed() || bnds->parsed()) {
            auto l = load(l_path), k = load(k_path);
            ComplexityQuery qy{l, k, strict ? MapKind::strict : MapKind::facet, injective};
            ComputeOptions opt{facet_cap, limits()};
            bool exact = complexity->parsed() && ! bounds_only;
            std::optional<ComplexityResult> res;
            if (exact)
                res = compute(qy, opt);
            auto b = bounds(qy, opt);
            if (res)
                b.exact = res->value;
            auto name = query_name(qy) + "(" + l.name() + ";" + k.name() + ")";
            if (as_json) {
                json j;
                j["schema"] = 1;
                j["kind"] = query_name(qy);
                j["injective"] = injective;
                j["strict"] = strict;
                j["source"] = l.name();
                j["target"] = k.name();
                if (res) {
                    j["value"] = value_json(res->value);
                    json cover = json::array();
                    if (res->cover)
                        for (const auto & g : res->cover->groups) {
                            json grp;
                            json fs = json::array();
                            for_each_bit(g.group, [&](std::size_t i) { fs.push_back(face_json(l, l.facets()[i])); });
                            grp["facets"] = fs;
                            grp["map"] = map_json(g.map);
                            cover.push_back(grp);
                        }
                    j["cover"] = cover;
                }
                j["bounds"] = bounds_json(b);
                out << j.dump(2) << "\n";
            }
            else {
                if (res) {
                    out << name << " = " << res->value.to_string() << "\n";
                    if (res->cover)
                        for (std::size_t i = 0; i < res->cover->groups.size(); ++i) {
                            const auto & g = res->cover->groups[i];
                            out << "group " << i + 1 << " " << faces_text(l, g.group) << "\n";
                            std::istringstream lines(serialize_map(g.map));
                            for (std::string line; std::getline(lines, line);)
                                out << "  " << line << "\n";
                        }
                }
                else
                    out << name << "\n";
                print_bounds(b, out);
            }
            return res && res->value.is_undecided() ? undecided : ok;
        }

        if (gen->parsed()) {
            GenerateParams p{max_size, density, seed};
            auto k = gen_kind == "gamma" ? GenerateKind::gamma : gen_kind == "kn" ? GenerateKind::kn : GenerateKind::random;
            auto c = generate(k, n, p);
            std::string text;
            if (k == GenerateKind::random)
                text = "# random n=" + std::to_string(n) + " max_facet_size=" + std::to_string(max_size) +
                    " density=" + CLI::detail::to_string(density) + " seed=" + std::to_string(*seed) + "\n";
            write_text(out_path, text + serialize_scx(c), out);
            return ok;
        }

        if (skel->parsed()) {
            auto c = load(file);
            write_text(out_path, serialize_scx(skeleton(c, q).with_name(c.name() + "^(" + std::to_string(q) + ")")), out);
            return ok;
        }

        if (ver->parsed()) {
            if (! replay_path.empty()) {
                auto r = replay(read_file(replay_path));
                auto word = r.outcome == Outcome::pass ? "pass" : r.outcome == Outcome::skip ? "skip" : "FAIL";
                out << word << (r.message.empty() ? "" : ": " + r.message) << "\n";
                return r.outcome == Outcome::fail ? violation : ok;
            }
            vc.properties = props;
            if (fixtures_only) {
                vc.properties.clear();
                vc.trials = 0;
                vc.fixtures = true;
            }
            if (no_fixtures)
                vc.fixtures = false;
            auto rep = verify(vc);
            if (as_json) {
                json j;
                j["schema"] = 1;
                j["seed"] = vc.seed;
                j["trials"] = vc.trials;
                j["fixtures"] = rep.fixture_lines;
                json ss = json::array();
                for (const auto & s : rep.suites) {
                    json o;
                    o["name"] = s.name;
                    o["passed"] = s.passed;
                    o["skipped"] = s.skipped;
                    o["failed"] = s.failed;
                    if (s.first_failure) {
                        o["first_failure"] = *s.first_failure;
                        o["message"] = s.message;
                        o["bundle"] = s.bundle_path.empty() ? json(s.bundle) : json(s.bundle_path);
                    }
                    ss.push_back(o);
                }
                j["suites"] = ss;
                j["observations"] = rep.observations;
                j["ok"] = rep.ok();
                out << j.dump(2) << "\n";
            }
            else
                out << rep.text;
            return rep.ok() ? ok : violation;
        }

        if (omap->parsed()) {
            auto l = load(l_path), k = load(k_path);
            auto r = oracle::brute_force_map_search(l, k, kind_of(kind), injective);
            if (as_json) {
                json j;
                j["schema"] = 1;
                j["found"] = r.found;
                j["map"] = r.map ? map_json(*r.map) : json(nullptr);
                out << j.dump(2) << "\n";
            }
            else if (r.found)
                out << "FOUND\n" << serialize_map(*r.map);
            else
                out << "NONE\n";
            return r.found ? ok : no_map;
        }

        if (ocx->parsed()) {
            auto l = load(l_path), k = load(k_path);
            ComplexityQuery qy{l, k, strict ? MapKind::strict : MapKind::facet, injective};
            auto r = oracle::brute_force_cover_complexity(qy);
            if (as_json) {
                json j;
                j["schema"] = 1;
                j["kind"] = query_name(qy);
                j["value"] = value_json(r.canonical);
                j["arbitrary_covers"] = r.arbitrary ? value_json(*r.arbitrary) : json(nullptr);
                out << j.dump(2) << "\n";
            }
            else {
                out << query_name(qy) << " = " << r.canonical.to_string() << "\n";
                if (r.arbitrary)
                    out << "over arbitrary subcomplex covers: " << r.arbitrary->to_string() << "\n";
            }
            return ok;
        }

        if (ochi->parsed()) {
            auto c = load(file);
            auto v = oracle::brute_force_chromatic(c);
            if (as_json) {
                json j;
                j["schema"] = 1;
                j["chi"] = v;
                out << j.dump(2) << "\n";
            }
            else
                out << "chi " << v << "\n";
            return ok;
        }
    }
    catch (const Error & e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}

} // namespace facetcx::cli

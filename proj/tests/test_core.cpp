#include <facetcx/complex.hpp>
#include <facetcx/fixtures.hpp>

#include <gtest/gtest.h>

using namespace facetcx;
namespace fx = facetcx::fixtures;

namespace {

auto faces_of(const Complex & c) -> std::vector<Face>
{
    std::vector<Face> out;
    for (auto f : c.facets())
        out.push_back(c.labels_of(f));
    return out;
}

auto edge_labels(const GraphView & g) -> std::set<std::string>
{
    std::set<std::string> out;
    for (auto [a, b] : g.edges)
        out.insert(g.vertices[a] + g.vertices[b]);
    return out;
}

} // namespace

TEST(Build, AbsorbsContainedFaces)
{
    auto c = Complex::from_faces({{"a", "b", "c"}, {"a", "b"}});
    ASSERT_EQ(c.facet_count(), 1u);
    EXPECT_EQ(faces_of(c)[0], (Face{"a", "b", "c"}));
}

TEST(Build, ExampleComplex)
{
    auto l = fx::ex_l();
    EXPECT_EQ(l.vertices(), (std::vector<std::string>{"a", "b", "c", "d", "e"}));
    EXPECT_EQ(faces_of(l), (std::vector<Face>{{"a", "b", "c"}, {"c", "d"}, {"c", "e"}, {"d", "e"}}));
    EXPECT_TRUE(l.is_facet(l.mask_of({"a", "b", "c"})));
}

TEST(Build, EmptyComplex)
{
    auto c = Complex::from_faces({});
    EXPECT_TRUE(c.empty());
    EXPECT_EQ(c.dim(), -1);
    auto m = metrics(c);
    EXPECT_EQ(m.eta, 0u);
    EXPECT_FALSE(m.pure);
}

TEST(Build, ExplicitVerticesBecomeSingletons)
{
    auto c = Complex::from_faces({{"1", "2"}}, std::vector<std::string>{"1", "2", "3"});
    EXPECT_EQ(c.facet_count(), 2u);
    EXPECT_EQ(c.isolated(), bit(2));
}

TEST(Build, Rejections)
{
    EXPECT_THROW(Complex::from_faces({{"a"}, {}}), Error);
    EXPECT_THROW(Complex::from_faces({{"a", "b"}, {" a"}}), Error);
    EXPECT_THROW(Complex::from_faces({{"a", "b"}}, std::vector<std::string>{"a"}), Error);
}

TEST(Build, RoundTripThroughFacets)
{
    for (auto c : {fx::ex_l(), fx::ex_k(), fx::k3_star(), facetcx::gamma(4), boundary(5)})
        EXPECT_EQ(Complex::from_faces(faces_of(c), c.vertices()), c);
}

TEST(Generate, GammaAndBoundary)
{
    auto g = facetcx::gamma(3);
    EXPECT_EQ(g.facet_count(), 1u);
    EXPECT_EQ(g.dim(), 2);
    auto k = boundary(3);
    EXPECT_EQ(faces_of(k), (std::vector<Face>{{"1", "2"}, {"1", "3"}, {"2", "3"}}));
    EXPECT_THROW(boundary(1), Error);
    for (std::size_t n = 2; n <= 8; ++n) {
        EXPECT_EQ(facetcx::gamma(n).dim(), static_cast<int>(n) - 1);
        EXPECT_EQ(boundary(n).dim(), static_cast<int>(n) - 2);
        EXPECT_EQ(boundary(n).facet_count(), n);
    }
}

TEST(Generate, RandomFullDensity)
{
    auto c = random_complex(4, {3, 1.0, 7});
    EXPECT_EQ(c, boundary(4).with_name(c.name()));
}

TEST(Generate, RandomIsReproducible)
{
    GenerateParams p{3, 0.4, 11};
    EXPECT_EQ(random_complex(6, p), random_complex(6, p));
    EXPECT_THROW(random_complex(3, {3, 0.5, std::nullopt}), Error);
}

TEST(Metrics, Examples)
{
    auto m = metrics(fx::ex_l());
    EXPECT_EQ(m.dim, 2);
    EXPECT_EQ(m.eta, 4u);
    EXPECT_FALSE(m.pure);
    auto g = metrics(facetcx::gamma(4));
    EXPECT_EQ(g.dim, 3);
    EXPECT_EQ(g.eta, 1u);
    EXPECT_TRUE(g.pure);
    auto k = metrics(boundary(4));
    EXPECT_EQ(k.dim, 2);
    EXPECT_EQ(k.eta, 4u);
    EXPECT_TRUE(k.pure);
}

TEST(Metrics, Degrees)
{
    auto l = fx::ex_l();
    auto m = metrics(l);
    auto c = *l.index_of("c");
    EXPECT_EQ(m.degree[c], 4u);        // a b d e
    EXPECT_EQ(m.d_degree[c][1], 4u);
    EXPECT_EQ(m.d_degree[c][2], 2u);   // a b through abc
    for (std::size_t v = 0; v < l.vertex_count(); ++v)
        EXPECT_LE(m.degree[v], m.d_degree[v][1] + m.d_degree[v][2]);
}

TEST(Skeleton, Examples)
{
    EXPECT_EQ(skeleton(facetcx::gamma(3), 1), boundary(3).with_name("Gamma_3"));
    auto s = skeleton(fx::ex_l(), 1);
    EXPECT_EQ(faces_of(s), (std::vector<Face>{{"a", "b"}, {"a", "c"}, {"b", "c"}, {"c", "d"}, {"c", "e"}, {"d", "e"}}));
    EXPECT_EQ(skeleton(fx::ex_l(), 2), fx::ex_l());
    EXPECT_EQ(skeleton(skeleton(facetcx::gamma(5), 2), 2), skeleton(facetcx::gamma(5), 2));
}

TEST(Graphs, Underlying)
{
    auto g = underlying_graph(boundary(4));
    EXPECT_EQ(g.edges.size(), 6u);
    EXPECT_EQ(underlying_graph(facetcx::gamma(4)), g);
    EXPECT_EQ(edge_labels(underlying_graph(fx::ex_l())), (std::set<std::string>{"ab", "ac", "bc", "cd", "ce", "de"}));
    auto single = underlying_graph(Complex::from_faces({{"x"}}));
    EXPECT_EQ(single.vertices.size(), 1u);
    EXPECT_TRUE(single.edges.empty());
}

TEST(Graphs, FacetGraph)
{
    auto g = facet_graph(fx::ex_l());
    EXPECT_EQ(g.vertices, (std::vector<std::string>{"c", "d", "e"}));
    EXPECT_EQ(edge_labels(g), (std::set<std::string>{"cd", "ce", "de"}));
    EXPECT_TRUE(facet_graph(facetcx::gamma(3)).vertices.empty());
    EXPECT_EQ(facet_graph(boundary(3)).edges.size(), 3u);
}

TEST(Union, Examples)
{
    EXPECT_EQ(unite({fx::a(), fx::b()}, false), boundary(3).with_name(""));
    auto star = unite({boundary(3), Complex::from_faces({{"*"}})}, true);
    EXPECT_EQ(star.vertex_count(), 4u);
    EXPECT_EQ(star.facet_count(), 4u);
    EXPECT_EQ(star, fx::k3_star());
    auto l = fx::ex_l();
    EXPECT_EQ(unite({l, l}, false), l);
}

TEST(Union, DisjointRejectsSharedVertex)
{
    try {
        unite({fx::a(), fx::b()}, true);
        FAIL() << "expected a rejection";
    }
    catch (const Error & e) {
        EXPECT_NE(std::string(e.what()).find("'2'"), std::string::npos);
    }
}

TEST(Union, AbsorbsAcrossParts)
{
    auto u = unite({Complex::from_faces({{"1", "2"}}), facetcx::gamma(3)}, false);
    EXPECT_EQ(u.facet_count(), 1u);
}

TEST(Closure, Examples)
{
    auto l = fx::ex_l();
    std::vector<Mask> one{l.mask_of({"a", "b", "c"})};
    auto c = closure(l, one);
    EXPECT_EQ(c.vertices(), (std::vector<std::string>{"a", "b", "c"}));
    EXPECT_EQ(c.facet_count(), 1u);
    std::vector<Mask> two{l.mask_of({"c", "d"}), l.mask_of({"c", "e"})};
    auto d = closure(l, two);
    EXPECT_EQ(d.vertices(), (std::vector<std::string>{"c", "d", "e"}));
    EXPECT_EQ(faces_of(d), (std::vector<Face>{{"c", "d"}, {"c", "e"}}));
    std::vector<Mask> all(l.facets().begin(), l.facets().end());
    EXPECT_EQ(closure(l, all), l);
    std::vector<Mask> bad{l.mask_of({"a", "b"})};
    EXPECT_THROW(closure(l, bad), Error);
}

TEST(Components, SplitsDisjointParts)
{
    auto u = unite({boundary(3), Complex::from_faces({{"x", "y"}}), Complex::from_faces({{"z"}})}, true);
    auto comps = facet_components(u);
    ASSERT_EQ(comps.size(), 3u);
    std::size_t total = 0;
    for (auto s : comps)
        total += component(u, s).facet_count();
    EXPECT_EQ(total, u.facet_count());
}

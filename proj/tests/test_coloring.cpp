#include <facetcx/coloring.hpp>
#include <facetcx/fixtures.hpp>
#include <facetcx/homsearch.hpp>
#include <facetcx/oracle.hpp>

#include <gtest/gtest.h>

using namespace facetcx;
namespace fx = facetcx::fixtures;

TEST(Chromatic, Examples)
{
    EXPECT_EQ(chromatic_number(fx::ex_l()).value, 3u);
    EXPECT_EQ(chromatic_number(fx::ex_k()).value, 2u);
    for (std::size_t n = 2; n <= 6; ++n)
        EXPECT_EQ(chromatic_number(facetcx::gamma(n)).value, 2u);
    EXPECT_EQ(chromatic_number(boundary(3)).value, 3u);
}

TEST(Chromatic, DegenerateConventions)
{
    EXPECT_EQ(chromatic_number(Complex::from_faces({})).value, 0u);
    EXPECT_EQ(chromatic_number(Complex::from_faces({{"a"}, {"b"}})).value, 1u);
}

TEST(Chromatic, WitnessIsValidAndSurjective)
{
    for (auto c : {fx::ex_l(), fx::ex_k(), fx::k3_star(), boundary(5), skeleton(facetcx::gamma(6), 2)}) {
        auto r = chromatic_number(c);
        EXPECT_TRUE(is_valid(c, r.witness));
        EXPECT_TRUE(r.witness.surjective);
        EXPECT_EQ(r.witness.k, r.value);
    }
}

// values frozen from exhaustive enumeration
TEST(Chromatic, AgreesWithEnumeration)
{
    EXPECT_EQ(oracle::brute_force_chromatic(boundary(4)), 2u);
    EXPECT_EQ(oracle::brute_force_chromatic(boundary(3)), 3u);
    EXPECT_EQ(chromatic_number(boundary(4)).value, 2u);
    for (std::uint64_t s = 1; s <= 40; ++s) {
        auto c = random_complex(6, {3, 0.25, s});
        EXPECT_EQ(chromatic_number(c).value, oracle::brute_force_chromatic(c)) << s;
    }
}

TEST(GraphChromatic, Examples)
{
    EXPECT_EQ(graph_chromatic_number(underlying_graph(fx::ex_l())).value, 3u);
    for (std::size_t n = 1; n <= 6; ++n)
        EXPECT_EQ(graph_chromatic_number(complete_graph(n)).value, n);
    EXPECT_EQ(graph_chromatic_number(complete_graph(2)).value, 2u);
    EXPECT_EQ(graph_chromatic_number(GraphView{}).value, 0u);
    EXPECT_EQ(strict_chromatic_number(fx::ex_l()).value, 3u);
}

TEST(BlockColoring, DimensionOneKeepsClasses)
{
    auto l = fx::ex_l();
    auto g = strict_chromatic_number(l);
    auto b = block_coloring(l, g.witness);
    EXPECT_EQ(b.k, 3u);
    EXPECT_TRUE(is_valid(l, b));
    EXPECT_EQ(b.color, g.witness.color);
}

TEST(BlockColoring, TriangleInTwoColours)
{
    auto t = facetcx::gamma(3);
    auto g = strict_chromatic_number(t);
    ASSERT_EQ(g.value, 3u);
    auto b = block_coloring(t, g.witness);
    EXPECT_EQ(b.k, 2u);
    EXPECT_TRUE(is_valid(t, b));
}

// Using dim(L) in place of the least facet dimension gives a bound below chi(L).
TEST(BlockColoring, DimensionCannotReplaceLeastFacetDimension)
{
    auto l = fx::ex_l();
    auto s = strict_chromatic_number(l).value;
    auto d = static_cast<std::size_t>(l.dim());
    EXPECT_EQ((s + d - 1) / d, 2u);
    EXPECT_EQ(chromatic_number(l).value, 3u);
}

TEST(BlockColoring, RejectsSingletonFacets)
{
    auto c = fx::k3_star();
    EXPECT_THROW(block_coloring(c, strict_chromatic_number(c).witness), Error);
}

TEST(ProductColoring, SinglePart)
{
    auto l = fx::ex_l();
    auto r = chromatic_number(l);
    auto p = product_coloring(l, {{l, r.witness}});
    EXPECT_EQ(p.color, r.witness.color);
}

TEST(ProductColoring, ExampleCover)
{
    auto l = fx::ex_l();
    auto l1 = fx::l1(), l2 = fx::l2();
    auto c1 = chromatic_number(l1), c2 = chromatic_number(l2);
    EXPECT_EQ(c1.value, 2u);
    EXPECT_EQ(c2.value, 2u);
    auto p = product_coloring(l, {{l1, c1.witness}, {l2, c2.witness}});
    EXPECT_TRUE(is_valid(l, p));
    EXPECT_LE(p.k, 4u);
}

TEST(ProductColoring, UncoveredFacetIsNamed)
{
    auto l = fx::ex_l();
    auto l1 = fx::l1();
    try {
        product_coloring(l, {{l1, chromatic_number(l1).witness}});
        FAIL() << "expected a rejection";
    }
    catch (const Error & e) {
        EXPECT_NE(std::string(e.what()).find("{c,e}"), std::string::npos);
    }
}

TEST(Pullback, Identity)
{
    auto k = fx::ex_k();
    auto w = chromatic_number(k).witness;
    EXPECT_EQ(pullback_coloring(identity_map(k), w).color, w.color);
}

TEST(Pullback, F1)
{
    auto w = chromatic_number(fx::ex_k()).witness;
    auto p = pullback_coloring(fx::f1(), w);
    EXPECT_TRUE(is_valid(fx::l1(), p));
    EXPECT_EQ(p.k, 2u);
    EXPECT_THROW(pullback_coloring(fx::g(), w), Error);
}

TEST(Chromatic, IsolatedVerticesDoNotMatter)
{
    EXPECT_EQ(chromatic_number(fx::k3_star()).value, chromatic_number(boundary(3)).value);
}

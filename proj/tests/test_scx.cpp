#include <facetcx/fixtures.hpp>
#include <facetcx/scx.hpp>

#include <gtest/gtest.h>

using namespace facetcx;
namespace fx = facetcx::fixtures;

TEST(Scx, AbsorbsOnLoad)
{
    auto c = parse_scx("f a b c\nf a b\n");
    EXPECT_EQ(c.facet_count(), 1u);
    EXPECT_EQ(c.vertex_count(), 3u);
}

TEST(Scx, CanonicalSerialization)
{
    EXPECT_EQ(serialize_scx(fx::ex_k()), "name EX_K\nv a' b' c' d'\nf a' b' c'\nf c' d'\n");
}

TEST(Scx, EmptyFacetLineIsAnError)
{
    try {
        parse_scx("# header\nf a b\nf\n");
        FAIL() << "expected a parse error";
    }
    catch (const ParseError & e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(Scx, UnknownLineType)
{
    try {
        parse_scx("f a\nx b\n");
        FAIL() << "expected a parse error";
    }
    catch (const ParseError & e) {
        EXPECT_EQ(e.line(), 2u);
    }
}

TEST(Scx, CommentsNamesAndDeclaredVertices)
{
    auto c = parse_scx("# a comment\r\nname two parts\r\nv p q r\r\nf p q\r\n");
    EXPECT_EQ(c.name(), "two parts");
    EXPECT_EQ(c.vertex_count(), 3u);
    EXPECT_EQ(c.isolated(), bit(2));
}

TEST(Scx, RoundTrip)
{
    for (auto c : {fx::ex_l(), fx::ex_k(), fx::k3_star(), facetcx::gamma(4), boundary(4), Complex::from_faces({})})
        EXPECT_EQ(parse_scx(serialize_scx(c)), c);
}

TEST(MapText, ParseAndSerialize)
{
    auto m = fx::f1();
    EXPECT_EQ(m.label_of("e"), "c'");
    EXPECT_EQ(parse_map(serialize_map(m), m.source, m.target), m);
}

TEST(MapText, UnmappedVertexIsAnError)
{
    EXPECT_THROW(parse_map("m a a'\n", fx::l1(), fx::ex_k()), ParseError);
    EXPECT_THROW(parse_map("m a zz\n", fx::l1(), fx::ex_k()), ParseError);
    EXPECT_THROW(parse_map("m a a'\nm a b'\n", fx::l1(), fx::ex_k()), ParseError);
}

TEST(Bundle, RoundTrip)
{
    Bundle b;
    b.header = {"suite triangle", "aux 17"};
    b.parts = {{"L", fx::ex_l()}, {"K", fx::ex_k()}};
    auto back = parse_bundle(serialize_bundle(b));
    EXPECT_EQ(back.header, b.header);
    ASSERT_EQ(back.parts.size(), 2u);
    EXPECT_EQ(back.get("L"), fx::ex_l());
    EXPECT_EQ(back.get("K"), fx::ex_k());
}

TEST(Bundle, ErrorLinesCountFromTheTop)
{
    try {
        parse_bundle("suite x\n--- L\nf a\nf\n");
        FAIL() << "expected a parse error";
    }
    catch (const ParseError & e) {
        EXPECT_EQ(e.line(), 4u);
    }
}

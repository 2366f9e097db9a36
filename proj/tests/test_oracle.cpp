#include <facetcx/fixtures.hpp>
#include <facetcx/oracle.hpp>

#include <gtest/gtest.h>

using namespace facetcx;
namespace fx = facetcx::fixtures;

TEST(OracleChromatic, Examples)
{
    EXPECT_EQ(oracle::brute_force_chromatic(fx::ex_l()), 3u);
    EXPECT_EQ(oracle::brute_force_chromatic(fx::ex_k()), 2u);
    EXPECT_EQ(oracle::brute_force_chromatic(boundary(4)), 2u);
    EXPECT_EQ(oracle::brute_force_chromatic(facetcx::gamma(5)), 2u);
    EXPECT_EQ(oracle::brute_force_chromatic(boundary(3)), 3u);
    EXPECT_EQ(oracle::brute_force_chromatic(Complex::from_faces({{"a"}})), 1u);
}

TEST(OracleMap, Examples)
{
    EXPECT_FALSE(oracle::brute_force_map_search(fx::ex_l(), fx::ex_k(), MapKind::facet, false).found);
    auto r = oracle::brute_force_map_search(fx::l1(), fx::ex_k(), MapKind::facet, false);
    ASSERT_TRUE(r.found);
    EXPECT_TRUE(classify(*r.map).facet);
    EXPECT_TRUE(oracle::brute_force_map_search(fx::ex_l(), fx::ex_k(), MapKind::strict, false).found);
    EXPECT_FALSE(oracle::brute_force_map_search(fx::ex_l(), fx::ex_k(), MapKind::strict, true).found);
}

TEST(OracleMap, FirstMapInLexicographicOrder)
{
    auto r = oracle::brute_force_map_search(fx::l1(), fx::ex_k(), MapKind::facet, false);
    ASSERT_TRUE(r.found);
    // a -> a' is the first choice that can succeed
    EXPECT_EQ(r.map->label_of("a"), "a'");
}

TEST(OracleMap, Limits)
{
    EXPECT_THROW(oracle::brute_force_map_search(boundary(6), facetcx::gamma(2), MapKind::facet, false), Error);
    EXPECT_THROW(oracle::brute_force_map_search(facetcx::gamma(2), facetcx::gamma(5), MapKind::facet, false), Error);
}

TEST(OracleCover, Examples)
{
    auto o = oracle::brute_force_cover_complexity({fx::ex_l(), fx::ex_k(), MapKind::facet, false});
    EXPECT_EQ(o.canonical, Value::finite(2));
    ASSERT_TRUE(o.arbitrary);
    EXPECT_EQ(*o.arbitrary, Value::finite(2));

    auto inf = oracle::brute_force_cover_complexity({fx::ex_l(), facetcx::gamma(3), MapKind::facet, false});
    EXPECT_EQ(inf.canonical, Value::infinity());

    auto iso = oracle::brute_force_cover_complexity({fx::k3_star(), boundary(3), MapKind::facet, true});
    EXPECT_EQ(iso.canonical, Value::finite(2));
}

TEST(OracleCover, SimplexCapSkipsArbitraryCovers)
{
    oracle::OracleLimits lim;
    lim.max_simplices = 3;
    auto o = oracle::brute_force_cover_complexity({fx::ex_l(), fx::ex_k(), MapKind::facet, false}, lim);
    EXPECT_FALSE(o.arbitrary);
}

TEST(OracleMatches, KindFlags)
{
    MapClass c;
    c.simplicial = c.strict = true;
    EXPECT_TRUE(oracle::matches(c, MapKind::strict, false));
    EXPECT_FALSE(oracle::matches(c, MapKind::strict, true));
    EXPECT_FALSE(oracle::matches(c, MapKind::facet, false));
}

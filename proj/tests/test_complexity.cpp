#include <facetcx/complexity.hpp>
#include <facetcx/fixtures.hpp>
#include <facetcx/oracle.hpp>

#include <gtest/gtest.h>

using namespace facetcx;
namespace fx = facetcx::fixtures;

namespace {

auto value(const Complex & l, const Complex & k, MapKind kind = MapKind::facet, bool inj = false) -> Value
{
    return compute({l, k, kind, inj}).value;
}

auto fin(std::size_t n) -> Value { return Value::finite(n); }

} // namespace

TEST(Value, OrderAndText)
{
    EXPECT_TRUE(fin(2).le(fin(3)));
    EXPECT_TRUE(fin(9).le(Value::infinity()));
    EXPECT_FALSE(Value::infinity().le(fin(9)));
    EXPECT_FALSE(Value::undecided().le(Value::infinity()));
    EXPECT_EQ(Value::infinity().to_string(), "infinity");
    EXPECT_THROW(Value::undecided().get(), Error);
    EXPECT_EQ(max_value(fin(2), Value::infinity()), Value::infinity());
    EXPECT_TRUE(max_value(fin(2), Value::undecided()).is_undecided());
}

TEST(Compute, ExampleFacetComplexity)
{
    auto l = fx::ex_l(), k = fx::ex_k();
    ComplexityQuery q{l, k, MapKind::facet, false};
    auto r = compute(q);
    EXPECT_EQ(r.value, fin(2));
    ASSERT_TRUE(r.cover);
    EXPECT_EQ(r.cover->value(), 2u);
    EXPECT_TRUE(verify_cover(q, *r.cover));
    // pinned certificate: {abc, cd, ce} and {de}
    EXPECT_EQ(l.labels_of(l.facets()[0]), (Face{"a", "b", "c"}));
    EXPECT_EQ(r.cover->groups[0].group, Mask{0b0111});
    EXPECT_EQ(r.cover->groups[1].group, Mask{0b1000});
}

// frozen after agreement with the enumeration oracle (canonical and arbitrary covers)
TEST(Compute, ExampleInjectiveComplexity)
{
    ComplexityQuery q{fx::ex_l(), fx::ex_k(), MapKind::facet, true};
    auto r = compute(q);
    EXPECT_EQ(r.value, fin(3));
    EXPECT_TRUE(verify_cover(q, *r.cover));
    auto o = oracle::brute_force_cover_complexity(q);
    EXPECT_EQ(o.canonical, fin(3));
    ASSERT_TRUE(o.arbitrary);
    EXPECT_EQ(*o.arbitrary, fin(3));
}

TEST(Compute, IsolatedVertex)
{
    EXPECT_EQ(value(fx::k3_star(), boundary(3), MapKind::facet, true), fin(2));
    EXPECT_EQ(value(boundary(3), boundary(3), MapKind::facet, true), fin(1));
    EXPECT_EQ(value(fx::k3_star(), boundary(3)), value(boundary(3), boundary(3)));
    EXPECT_EQ(value(fx::k3_star(), boundary(3)), fin(1));
}

TEST(Compute, SkeletonExample)
{
    auto ls = skeleton(fx::ex_l(), 1), ks = skeleton(fx::ex_k(), 1);
    EXPECT_EQ(value(ls, ks), fin(1));
    auto m = make_map(ls, ks, {{"a", "a'"}, {"e", "a'"}, {"b", "b'"}, {"d", "b'"}, {"c", "c'"}});
    EXPECT_TRUE(classify(m).facet);
}

TEST(Compute, DisjointUnionExample)
{
    EXPECT_EQ(value(unite({fx::a(), fx::b()}, false), facetcx::gamma(2)), fin(2));
    EXPECT_EQ(value(fx::a(), facetcx::gamma(2)), fin(1));
    EXPECT_EQ(value(fx::b(), facetcx::gamma(2)), fin(1));
}

TEST(Compute, InfiniteAndConventions)
{
    EXPECT_EQ(value(fx::ex_l(), facetcx::gamma(3)), Value::infinity());
    EXPECT_EQ(value(Complex::from_faces({}), fx::ex_k()), fin(1));
    EXPECT_EQ(value(fx::ex_k(), Complex::from_faces({})), Value::infinity());
    EXPECT_EQ(value(facetcx::gamma(4), facetcx::gamma(3), MapKind::strict), Value::infinity());
}

TEST(Compute, StrictQueries)
{
    EXPECT_EQ(value(fx::ex_l(), fx::ex_k(), MapKind::strict), fin(1));
    EXPECT_EQ(value(boundary(3), facetcx::gamma(2), MapKind::strict), fin(2));
    EXPECT_EQ(query_name({fx::ex_l(), fx::ex_k(), MapKind::strict, true}), "IC_s");
}

TEST(Compute, CapRejection)
{
    auto l = skeleton(facetcx::gamma(8), 1); // 28 edges
    try {
        compute({l, facetcx::gamma(2), MapKind::facet, false});
        FAIL() << "expected a rejection";
    }
    catch (const Error & e) {
        EXPECT_NE(std::string(e.what()).find("bounds-only"), std::string::npos);
    }
    EXPECT_TRUE(bounds({l, facetcx::gamma(2), MapKind::facet, false}).finite);
}

TEST(Compute, BudgetGivesUndecided)
{
    auto l = skeleton(facetcx::gamma(7), 1);
    auto r = compute({l, skeleton(facetcx::gamma(6), 1), MapKind::facet, false}, {21, {20, 1e9}});
    EXPECT_TRUE(r.value.is_undecided());
}

TEST(Bounds, Example)
{
    auto b = bounds({fx::ex_l(), fx::ex_k(), MapKind::facet, false});
    EXPECT_EQ(b.chromatic_lower, 2u);
    ASSERT_TRUE(b.graph_lower);
    EXPECT_EQ(*b.graph_lower, fin(2));
    EXPECT_EQ(b.eta_upper, fin(4));
    EXPECT_TRUE(b.finite);
    EXPECT_FALSE(b.complete_target_ic);
}

TEST(Bounds, CompleteTarget)
{
    auto b = bounds({boundary(4), facetcx::gamma(3), MapKind::facet, true});
    EXPECT_EQ(b.complete_target_ic, 4u);
    EXPECT_EQ(value(boundary(4), facetcx::gamma(3), MapKind::facet, true), fin(4));
    EXPECT_FALSE(bounds({fx::ex_l(), facetcx::gamma(3), MapKind::facet, false}).finite);
}

TEST(Bounds, LogCeiling)
{
    EXPECT_EQ(log_ceiling(2, 1), 1u);
    EXPECT_EQ(log_ceiling(2, 3), 2u);
    EXPECT_EQ(log_ceiling(2, 4), 2u);
    EXPECT_EQ(log_ceiling(3, 10), 3u);
}

TEST(Bounds, Finiteness)
{
    EXPECT_TRUE(finiteness({fx::ex_l(), fx::ex_k(), MapKind::facet, false}));
    EXPECT_FALSE(finiteness({fx::ex_l(), facetcx::gamma(3), MapKind::facet, false}));
    EXPECT_TRUE(finiteness({facetcx::gamma(3), fx::ex_k(), MapKind::facet, true}));
    EXPECT_FALSE(finiteness({fx::ex_k(), facetcx::gamma(3), MapKind::facet, true}));
    EXPECT_TRUE(finiteness({facetcx::gamma(3), facetcx::gamma(4), MapKind::strict, true}));
}

TEST(Disjoint, MatchesDirectComputation)
{
    auto u = unite({boundary(3), Complex::from_faces({{"x", "y", "z"}}), Complex::from_faces({{"p", "q"}})}, true);
    ComplexityQuery q{u, fx::ex_k(), MapKind::facet, false};
    EXPECT_EQ(disjoint_decompose(q), compute(q).value);
    EXPECT_THROW(disjoint_decompose({u, fx::ex_k(), MapKind::facet, true}), Error);
    EXPECT_THROW(disjoint_decompose({u, fx::ex_k(), MapKind::strict, false}), Error);
}

// Pinned cases where a skeleton of Gamma_n as target does not behave like K_n.
// Values frozen after agreement with the enumeration oracle on the small case.
TEST(SkeletonEquality, GammaTargetCounterexamples)
{
    EXPECT_EQ(value(facetcx::gamma(3), facetcx::gamma(2), MapKind::strict), Value::infinity());
    EXPECT_EQ(value(skeleton(facetcx::gamma(3), 1), facetcx::gamma(2)), fin(2));

    auto l = skeleton(facetcx::gamma(5), 2);
    EXPECT_EQ(value(l, facetcx::gamma(3), MapKind::strict), fin(3));
    EXPECT_EQ(value(skeleton(facetcx::gamma(5), 1), skeleton(facetcx::gamma(3), 1)), fin(2));
}

TEST(SkeletonEquality, ExistenceLevelHolds)
{
    auto l = skeleton(facetcx::gamma(5), 2);
    auto strict = find_map(l, facetcx::gamma(3), MapKind::strict).found();
    auto graph = find_map(skeleton(l, 1), skeleton(facetcx::gamma(3), 1), MapKind::facet).found();
    EXPECT_EQ(strict, graph);
    EXPECT_FALSE(strict);
}

TEST(Compute, AgreesWithEnumeration)
{
    std::size_t checked = 0;
    for (std::uint64_t s = 1; s <= 60; ++s) {
        auto l = random_complex(3 + s % 3, {3, 0.35, s});
        auto k = random_complex(2 + s % 3, {3, 0.5, s + 1000});
        if (l.facet_count() > 4 || l.facet_count() == 0)
            continue;
        for (auto kind : {MapKind::facet, MapKind::strict})
            for (bool inj : {false, true}) {
                ComplexityQuery q{l, k, kind, inj};
                auto r = compute(q);
                auto o = oracle::brute_force_cover_complexity(q);
                ASSERT_EQ(r.value, o.canonical) << s;
                if (o.arbitrary)
                    EXPECT_EQ(r.value, *o.arbitrary) << s;
                if (r.cover)
                    EXPECT_TRUE(verify_cover(q, *r.cover));
                ++checked;
            }
    }
    EXPECT_GE(checked, 40u);
}

#include <facetcx/fixtures.hpp>
#include <facetcx/homsearch.hpp>
#include <facetcx/oracle.hpp>

#include <gtest/gtest.h>

using namespace facetcx;
namespace fx = facetcx::fixtures;

namespace {

auto group_of(const Complex & c, std::initializer_list<Face> faces) -> Mask
{
    Mask g = 0;
    for (const auto & f : faces)
        g |= bit(*c.facet_index(c.mask_of(f)));
    return g;
}

} // namespace

TEST(FindMap, ExampleHasNoFacetMap)
{
    auto r = find_map(fx::ex_l(), fx::ex_k(), MapKind::facet);
    EXPECT_EQ(r.status, SearchStatus::none);
    EXPECT_FALSE(oracle::brute_force_map_search(fx::ex_l(), fx::ex_k(), MapKind::facet, false).found);
}

TEST(FindMap, L1HasAFacetMap)
{
    auto r = find_map(fx::l1(), fx::ex_k(), MapKind::facet);
    ASSERT_TRUE(r.found());
    EXPECT_TRUE(classify(*r.map).facet);
}

TEST(FindMap, IdentityInjective)
{
    for (auto c : {fx::ex_l(), fx::ex_k(), fx::k3_star(), boundary(4)}) {
        auto r = find_map(c, c, MapKind::facet, true);
        ASSERT_TRUE(r.found());
        EXPECT_TRUE(classify(*r.map).injective);
    }
}

TEST(FindMap, StrictMapOnExample)
{
    auto r = find_map(fx::ex_l(), fx::ex_k(), MapKind::strict);
    ASSERT_TRUE(r.found());
    auto c = classify(*r.map);
    EXPECT_TRUE(c.strict);
    EXPECT_TRUE(classify(fx::g()).strict);
}

TEST(FindMap, BudgetGivesUndecided)
{
    auto l = skeleton(facetcx::gamma(7), 1);
    auto k = skeleton(facetcx::gamma(6), 1);
    auto r = find_map(l, k, MapKind::facet, false, SearchLimits{50, std::numeric_limits<double>::infinity()});
    EXPECT_EQ(r.status, SearchStatus::undecided);
    EXPECT_GT(r.nodes, 50u);
    // with no budget the answer is proven: K_7 has no homomorphism into K_6
    EXPECT_EQ(find_map(l, k, MapKind::facet).status, SearchStatus::none);
}

TEST(FindMap, CertificatesAreDeterministic)
{
    auto a = find_map(fx::l1(), fx::ex_k(), MapKind::facet);
    auto b = find_map(fx::l1(), fx::ex_k(), MapKind::facet);
    EXPECT_EQ(a.map, b.map);
}

TEST(FindMap, EmptyCases)
{
    auto empty = Complex::from_faces({});
    EXPECT_TRUE(find_map(empty, fx::ex_k(), MapKind::facet).found());
    EXPECT_FALSE(find_map(fx::ex_k(), empty, MapKind::facet).found());
    EXPECT_TRUE(find_map(empty, empty, MapKind::strict).found());
}

// frozen from enumeration over all 4^4 assignments
TEST(GroupFeasible, Examples)
{
    auto l = fx::ex_l(), k = fx::ex_k();
    std::vector<Mask> abc_cd{l.mask_of({"a", "b", "c"}), l.mask_of({"c", "d"})};
    std::vector<Mask> cd_de{l.mask_of({"c", "d"}), l.mask_of({"d", "e"})};
    EXPECT_TRUE(group_feasible(l, abc_cd, k, MapKind::facet, true));
    EXPECT_FALSE(group_feasible(l, cd_de, k, MapKind::facet, true));
    EXPECT_TRUE(group_feasible(l, {}, k, MapKind::facet, true));

    auto sub = closure(l, abc_cd);
    EXPECT_TRUE(oracle::brute_force_map_search(sub, k, MapKind::facet, true).found);
    EXPECT_FALSE(oracle::brute_force_map_search(closure(l, cd_de), k, MapKind::facet, true).found);
}

TEST(GroupFeasible, MemoAndCertificate)
{
    auto l = fx::ex_l(), k = fx::ex_k();
    GroupFeasibility gf(l, k, MapKind::facet, false);
    auto g = group_of(l, {{"a", "b", "c"}, {"c", "d"}, {"d", "e"}});
    EXPECT_TRUE(gf(g));
    EXPECT_TRUE(gf(g));
    EXPECT_EQ(gf.probes(), 1u);
    auto m = gf.certificate(g);
    ASSERT_TRUE(m);
    EXPECT_TRUE(classify(*m).facet);
    EXPECT_FALSE(gf(low_bits(l.facet_count())));
}

TEST(FindMap, NecessaryConditions)
{
    // an edge facet cannot land on a triangle
    EXPECT_FALSE(find_map(fx::ex_l(), facetcx::gamma(3), MapKind::facet).found());
    // a tetrahedron does not fit into a triangle injectively
    EXPECT_FALSE(find_map(facetcx::gamma(4), facetcx::gamma(3), MapKind::strict).found());
    EXPECT_TRUE(find_map(facetcx::gamma(3), facetcx::gamma(4), MapKind::strict).found());
}

TEST(FindMap, OneDimensionalIsGraphHomomorphism)
{
    auto c5 = Complex::from_faces({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"1", "5"}});
    auto k2 = facetcx::gamma(2);
    auto k3 = boundary(3);
    EXPECT_FALSE(find_map(c5, k2, MapKind::facet).found());
    EXPECT_TRUE(find_map(c5, k3, MapKind::facet).found());
    EXPECT_FALSE(find_map(c5, k2, MapKind::strict).found());
    EXPECT_TRUE(find_map(c5, k3, MapKind::strict).found());
}

TEST(FindMap, AgreesWithEnumeration)
{
    std::size_t checked = 0;
    for (std::uint64_t s = 1; s <= 120; ++s) {
        auto l = random_complex(2 + s % 4, {3, 0.3, s});
        auto k = random_complex(1 + s % 4, {3, 0.5, s * 7919});
        for (auto kind : {MapKind::facet, MapKind::strict})
            for (bool inj : {false, true}) {
                auto fast = find_map(l, k, kind, inj);
                auto slow = oracle::brute_force_map_search(l, k, kind, inj);
                ASSERT_EQ(fast.found(), slow.found) << s;
                if (fast.found())
                    EXPECT_TRUE(oracle::matches(classify(*fast.map), kind, inj));
                ++checked;
            }
    }
    EXPECT_GE(checked, 200u);
}

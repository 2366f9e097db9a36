#pragma once

// The worked examples, embedded as .scx text.

#include <facetcx/complex.hpp>
#include <facetcx/maps.hpp>
#include <facetcx/scx.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace facetcx::fixtures {

inline constexpr std::string_view ex_l_scx = R"(name EX_L
f a b c
f c d
f d e
f c e
)";

inline constexpr std::string_view ex_k_scx = R"(name EX_K
f a' b' c'
f c' d'
)";

// EX_L = L_1 cup L_2
inline constexpr std::string_view l1_scx = R"(name L_1
f a b c
f c d
f d e
)";

inline constexpr std::string_view l2_scx = R"(name L_2
f c e
)";

// A cup B is the boundary of a triangle
inline constexpr std::string_view a_scx = R"(name A
f 1 2
f 1 3
)";

inline constexpr std::string_view b_scx = R"(name B
f 2 3
)";

inline constexpr std::string_view k3_star_scx = R"(name K_3+*
f 1 2
f 1 3
f 2 3
v *
)";

// f_1 : L_1 -> EX_K
inline constexpr std::string_view f1_map = R"(m a a'
m b b'
m c c'
m d d'
m e c'
)";

// a graph homomorphism of the 1-skeletons, not a facet map on EX_L
inline constexpr std::string_view g_map = R"(m a a'
m b b'
m c c'
m d b'
m e a'
)";

inline auto ex_l() -> Complex { return parse_scx(ex_l_scx); }
inline auto ex_k() -> Complex { return parse_scx(ex_k_scx); }
inline auto l1() -> Complex { return parse_scx(l1_scx); }
inline auto l2() -> Complex { return parse_scx(l2_scx); }
inline auto a() -> Complex { return parse_scx(a_scx); }
inline auto b() -> Complex { return parse_scx(b_scx); }
inline auto k3_star() -> Complex { return parse_scx(k3_star_scx); }

inline auto f1() -> VertexMap { return parse_map(f1_map, l1(), ex_k()); }
inline auto g() -> VertexMap { return parse_map(g_map, ex_l(), ex_k()); }

inline auto names() -> std::vector<std::string> { return {"EX_L", "EX_K", "L_1", "L_2", "A", "B", "K_3+*"}; }

inline auto by_name(const std::string & name) -> Complex
{
    if (name == "EX_L")
        return ex_l();
    if (name == "EX_K")
        return ex_k();
    if (name == "L_1")
        return l1();
    if (name == "L_2")
        return l2();
    if (name == "A")
        return a();
    if (name == "B")
        return b();
    if (name == "K_3+*")
        return k3_star();
    throw Error("unknown fixture '" + name + "'");
}

} // namespace facetcx::fixtures

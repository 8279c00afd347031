#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodgeorbit/error.hpp"
#include "hodgeorbit/grading.hpp"
#include "hodgeorbit/lines.hpp"

using namespace hodgeorbit;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("lines parabolic") {
    CHECK(lines_parabolic(RootSystem(parse_lie_type("G2")), {2}) == std::vector<int>{1});
    CHECK(lines_parabolic(RootSystem(parse_lie_type("E8")), {8}) == std::vector<int>{7});
    CHECK(lines_parabolic(RootSystem(parse_lie_type("B5")), {2}) == std::vector<int>{1, 3});
    CHECK(lines_parabolic(RootSystem(parse_lie_type("D4")), {2}) == std::vector<int>{1, 3, 4});
    CHECK(code_of([] { lines_parabolic(RootSystem(parse_lie_type("A3")), {1, 2}); }) == ErrorCode::NotMaximalParabolic);
}

TEST_CASE("variety of lines descriptors") {
    const FlagDescriptor g2 = co_descriptor(RootSystem(parse_lie_type("G2")), {2});
    CHECK(format_components(g2.subdiagram) == "A1");
    CHECK(g2.dimension == 1);
    CHECK(g2.display_name == "v3(P1)");
    const FlagDescriptor f4 = co_descriptor(RootSystem(parse_lie_type("F4")), {1});
    CHECK(format_components(f4.subdiagram) == "C3");
    CHECK(f4.marked_nodes == std::vector<int>{2});
    CHECK(f4.dimension == 6);
    CHECK(f4.display_name == "LG(3,6)");
    const FlagDescriptor e8 = co_descriptor(RootSystem(parse_lie_type("E8")), {8});
    CHECK(format_components(e8.subdiagram) == "E7");
    CHECK(e8.dimension == 27);
    CHECK(co_descriptor(RootSystem(parse_lie_type("E6")), {2}).display_name == "Gr(3,6)");
    CHECK(co_descriptor(RootSystem(parse_lie_type("E7")), {1}).dimension == 15);
}

TEST_CASE("descriptor dimension equals a and g^{-1} has dimension 2a+2") {
    const std::pair<const char*, int> a_values[] = {{"B3", 2},  {"B4", 4},  {"B5", 6}, {"D4", 3},
                                                    {"D5", 5},  {"D6", 7},  {"E6", 9}, {"E7", 15},
                                                    {"E8", 27}, {"F4", 6},  {"G2", 1}};
    for (const auto& [name, a] : a_values) {
        CAPTURE(name);
        const RootSystem rs(parse_lie_type(name));
        const int i = fundamental_adjoint_node(rs);
        CHECK(co_descriptor(rs, {i}).dimension == a);
        CHECK(parabolic(rs, {i}).eigen_dims.at(-1) == 2 * a + 2);
        CHECK(cone_horizontal(rs, {i}));
    }
}

TEST_CASE("general index sets give one component per node") {
    const RootSystem a4(parse_lie_type("A4"));
    const auto comps = co_descriptors(a4, {1, 4});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].node == 1);
    CHECK(comps[1].node == 4);
}

TEST_CASE("horizontality of the cone") {
    CHECK(cone_horizontal(RootSystem(parse_lie_type("G2")), {2}));
    CHECK_FALSE(cone_horizontal(RootSystem(parse_lie_type("G2")), {1}));
    CHECK_FALSE(cone_horizontal(RootSystem(parse_lie_type("F4")), {4}));
    for (int i = 1; i <= 5; ++i) CHECK(cone_horizontal(RootSystem(parse_lie_type("A5")), {i}));
}

TEST_CASE("root directions in the variety of lines") {
    const RootSystem g2(parse_lie_type("G2"));
    CHECK(co_membership_root_direction(g2, {2}, Coords{0, 1}));
    // 3a1+a2 is long, so omega_2 pairs to 1 with its coroot.
    CHECK(co_membership_root_direction(g2, {2}, Coords{3, 1}));
    CHECK_FALSE(co_membership_root_direction(g2, {2}, Coords{1, 1}));
    CHECK_FALSE(co_membership_root_direction(g2, {2}, Coords{2, 1}));
    CHECK(code_of([&] { co_membership_root_direction(g2, {2}, Coords{3, 2}); }) == ErrorCode::NotDegreeOne);

    for (const char* name : {"A4", "B4", "D5", "E6", "F4"}) {
        const RootSystem rs(parse_lie_type(name));
        const std::vector<int> I{2};
        for (int j = 1; j <= rs.rank(); ++j) {
            if (j == 2) CHECK(co_membership_root_direction(rs, I, rs.simple_root(j)));
            else CHECK(code_of([&] { co_membership_root_direction(rs, I, rs.simple_root(j)); }) == ErrorCode::NotDegreeOne);
        }
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodgeorbit/error.hpp"
#include "hodgeorbit/rootdata.hpp"
#include "oracles.hpp"

#include <random>

using namespace hodgeorbit;

namespace {

const char* kAllTypes[] = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "B2", "B3", "B4", "B5", "B6", "C2", "C3", "C4",
                           "C5", "D4", "D5", "D6", "D7", "E6", "E7", "E8", "F4", "G2"};

bool throws_code(ErrorCode code, auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

}  // namespace

TEST_CASE("parse and rank bounds") {
    CHECK(parse_lie_type("E8") == LieType{Family::E, 8});
    CHECK(parse_lie_type("b4") == LieType{Family::B, 4});
    CHECK(throws_code(ErrorCode::InvalidRank, [] { build_root_system(LieType{Family::D, 3}); }));
    CHECK(throws_code(ErrorCode::InvalidRank, [] { build_root_system(LieType{Family::E, 5}); }));
    CHECK(throws_code(ErrorCode::InvalidRank, [] { build_root_system(LieType{Family::G, 3}); }));
    CHECK(throws_code(ErrorCode::InvalidRank, [] { build_root_system(LieType{Family::B, 1}); }));
    CHECK(throws_code(ErrorCode::InvalidType, [] { parse_lie_type("X3"); }));
}

TEST_CASE("small systems") {
    const RootSystem a1(LieType{Family::A, 1});
    REQUIRE(a1.num_positive() == 1);
    CHECK(a1.positive_roots()[0] == Coords{1});
    CHECK(RootSystem(LieType{Family::G, 2}).num_positive() == 6);
    const RootSystem e8(LieType{Family::E, 8});
    CHECK(e8.num_positive() == 120);
    CHECK(e8.dim() == 248);
}

TEST_CASE("root system invariants for every type") {
    for (const char* name : kAllTypes) {
        CAPTURE(name);
        const RootSystem rs = build_root_system(parse_lie_type(name));
        const int r = rs.rank();
        CHECK(rs.num_positive() == oracle::classical_positive_count(rs.lie_type()));
        for (int i = 0; i < r; ++i) {
            CHECK(rs.cartan()[i][i] == 2);
            for (int j = 0; j < r; ++j) {
                if (i != j) CHECK((rs.cartan()[i][j] <= 0 && rs.cartan()[i][j] >= -3));
                CHECK(rs.lengths()[j] * rs.cartan()[i][j] == rs.lengths()[i] * rs.cartan()[j][i]);
            }
        }
        for (std::size_t k = 1; k < rs.positive_roots().size(); ++k) {
            const Coords& a = rs.positive_roots()[k - 1];
            const Coords& b = rs.positive_roots()[k];
            CHECK((height(a) < height(b) || (height(a) == height(b) && a < b)));
        }
        for (const Coords& a : rs.roots()) {
            const bool nonneg = std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
            const bool nonpos = std::all_of(a.begin(), a.end(), [](int x) { return x <= 0; });
            CHECK((nonneg || nonpos));
            for (int j = 1; j <= r; ++j) {
                CHECK(rs.is_root(reflect(rs, rs.simple_root(j), a)));
                CHECK(coroot_pairing(rs, a, a) == 2);
            }
        }
        for (int j = 1; j <= r; ++j) CHECK_FALSE(rs.is_root(rs.highest_root() + rs.simple_root(j)));
    }
}

TEST_CASE("highest roots in Bourbaki numbering") {
    CHECK(RootSystem(parse_lie_type("A4")).highest_root() == Coords{1, 1, 1, 1});
    CHECK(RootSystem(parse_lie_type("B4")).highest_root() == Coords{1, 2, 2, 2});
    CHECK(RootSystem(parse_lie_type("C4")).highest_root() == Coords{2, 2, 2, 1});
    CHECK(RootSystem(parse_lie_type("D5")).highest_root() == Coords{1, 2, 2, 1, 1});
    CHECK(RootSystem(parse_lie_type("E6")).highest_root() == Coords{1, 2, 2, 3, 2, 1});
    CHECK(RootSystem(parse_lie_type("E7")).highest_root() == Coords{2, 2, 3, 4, 3, 2, 1});
    CHECK(RootSystem(parse_lie_type("E8")).highest_root() == Coords{2, 3, 4, 6, 5, 4, 3, 2});
    CHECK(RootSystem(parse_lie_type("F4")).highest_root() == Coords{2, 3, 4, 2});
    CHECK(RootSystem(parse_lie_type("G2")).highest_root() == Coords{3, 2});
}

TEST_CASE("coroot pairings and reflections") {
    const RootSystem g2(parse_lie_type("G2"));
    CHECK(coroot_pairing(g2, Coords{1, 0}, Coords{0, 1}) == -1);
    CHECK(coroot_pairing(g2, Coords{0, 1}, Coords{1, 0}) == -3);
    CHECK(coroot_pairing(g2, Coords{2, 1}, Coords{0, 1}) == 0);
    CHECK(coroot_pairing(g2, std::vector<Rational>{Rational(1, 2), 0}, Coords{0, 1}) == Rational(-1, 2));
    CHECK(reflect(g2, Coords{1, 0}, Coords{0, 1}) == Coords{3, 1});
    CHECK(reflect(g2, Coords{3, 1}, Coords{3, 1}) == Coords{-3, -1});
    CHECK(throws_code(ErrorCode::NotARoot, [&] { coroot_pairing(g2, Coords{1, 0}, Coords{1, 2}); }));

    const RootSystem b3(parse_lie_type("B3"));
    CHECK(reflect(b3, Coords{0, 1, 0}, b3.highest_root()) == b3.highest_root() - Coords{0, 1, 0});
}

TEST_CASE("reflections are involutions on random root pairs") {
    std::mt19937_64 rng(20240611);
    for (const char* name : kAllTypes) {
        const RootSystem rs(parse_lie_type(name));
        std::uniform_int_distribution<std::size_t> pick(0, rs.roots().size() - 1);
        for (int t = 0; t < 50; ++t) {
            const Coords& a = rs.roots()[pick(rng)];
            const Coords& b = rs.roots()[pick(rng)];
            const Coords rb = reflect(rs, a, b);
            CHECK(rs.is_root(rb));
            CHECK(reflect(rs, a, rb) == b);
        }
    }
}

TEST_CASE("conjugation rule") {
    const RootSystem g2(parse_lie_type("G2"));
    for (const Coords& a : g2.roots()) CHECK(conjugate_root(g2, a, {}) == -a);
    CHECK(conjugate_root(g2, Coords{0, 1}, {Coords{0, 1}}) == Coords{0, 1});
    CHECK(conjugate_root(g2, Coords{3, 2}, {Coords{0, 1}}) == Coords{-3, -1});
    CHECK(throws_code(ErrorCode::NotStronglyOrthogonal,
                      [&] { conjugate_root(g2, Coords{1, 0}, {Coords{0, 1}, Coords{3, 1}}); }));

    // Agrees with -(r_{beta_s} ... r_{beta_1})(alpha) and is an involution.
    for (const char* name : {"B4", "D5", "E6", "F4", "G2"}) {
        CAPTURE(name);
        const RootSystem rs(parse_lie_type(name));
        std::vector<Coords> B;
        for (const Coords& b : rs.positive_roots()) {
            if (std::all_of(B.begin(), B.end(), [&](const Coords& c) { return strongly_orthogonal(rs, b, c); }))
                B.push_back(b);
        }
        for (const Coords& a : rs.roots()) {
            Coords w = a;
            for (const Coords& b : B) w = reflect(rs, b, w);
            const Coords bar = conjugate_root(rs, a, B);
            CHECK(bar == -w);
            CHECK(conjugate_root(rs, bar, B) == a);
        }
    }
}

TEST_CASE("diagram classification") {
    CHECK(format_components(classify_cartan(RootSystem(parse_lie_type("F4")).cartan())) == "F4");
    CHECK(format_components(classify_cartan(RootSystem(parse_lie_type("C3")).cartan())) == "C3");
    CHECK(format_components(classify_cartan(RootSystem(parse_lie_type("B2")).cartan())) == "B2");
    CHECK(format_components(classify_cartan({})) == "0");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodgeorbit/error.hpp"
#include "hodgeorbit/grading.hpp"

#include <random>

using namespace hodgeorbit;

namespace {

std::map<int, int> dims(std::initializer_list<std::pair<const int, int>> l) { return std::map<int, int>(l); }

}  // namespace

TEST_CASE("parabolic gradings") {
    const RootSystem g2(parse_lie_type("G2"));
    const ParabolicData p = parabolic(g2, {2});
    CHECK(p.eigen_dims == dims({{-2, 1}, {-1, 4}, {0, 4}, {1, 4}, {2, 1}}));
    CHECK(p.cartan_part == 2);
    CHECK(p.root_part == 2);
    CHECK(p.flag_dim == 5);
    CHECK(p.grading_element.coeffs == std::vector<int>{0, 1});

    const RootSystem a1(parse_lie_type("A1"));
    CHECK(parabolic(a1, {1}).eigen_dims == dims({{-1, 1}, {0, 1}, {1, 1}}));

    bool threw = false;
    try {
        parabolic(g2, {3});
    } catch (const Error& e) {
        threw = e.code() == ErrorCode::IndexOutOfRange;
    }
    CHECK(threw);
}

TEST_CASE("parabolic invariants on random index sets") {
    std::mt19937_64 rng(7);
    for (const char* name : {"A5", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2"}) {
        CAPTURE(name);
        const RootSystem rs(parse_lie_type(name));
        for (int t = 0; t < 10; ++t) {
            std::vector<int> I;
            for (int j = 1; j <= rs.rank(); ++j)
                if (rng() % 2) I.push_back(j);
            if (I.empty()) I.push_back(1);
            const ParabolicData p = parabolic(rs, I);
            int total = 0, positive = 0;
            for (const auto& [q, d] : p.eigen_dims) {
                total += d;
                if (q > 0) positive += d;
                CHECK(p.eigen_dims.at(-q) == d);
            }
            CHECK(total == rs.dim());
            CHECK(positive == p.flag_dim);
            CHECK(p.eigen_dims.at(0) == p.cartan_part + p.root_part);
        }
    }
}

TEST_CASE("fundamental adjoint detection") {
    CHECK(is_fundamental_adjoint(RootSystem(parse_lie_type("G2")), {2}));
    CHECK_FALSE(is_fundamental_adjoint(RootSystem(parse_lie_type("C3")), {1}));
    CHECK_FALSE(is_fundamental_adjoint(RootSystem(parse_lie_type("B3")), {1}));
    CHECK_FALSE(is_fundamental_adjoint(RootSystem(parse_lie_type("B3")), {1, 2}));
    CHECK(fundamental_adjoint_node(RootSystem(parse_lie_type("A3"))) == 0);
    CHECK(fundamental_adjoint_node(RootSystem(parse_lie_type("C4"))) == 0);
    const std::pair<const char*, int> expected[] = {{"B3", 2}, {"B5", 2}, {"D4", 2}, {"D6", 2}, {"E6", 2},
                                                    {"E7", 1}, {"E8", 8}, {"F4", 1}, {"G2", 2}};
    for (const auto& [name, node] : expected) {
        CAPTURE(name);
        const RootSystem rs(parse_lie_type(name));
        CHECK(fundamental_adjoint_node(rs) == node);
        const ParabolicData p = parabolic(rs, {node});
        CHECK(p.eigen_dims.at(2) == 1);
        CHECK(p.eigen_dims.at(-2) == 1);
        CHECK(p.eigen_dims.count(3) == 0);
    }
}

TEST_CASE("compact and noncompact roots") {
    const RootSystem g2(parse_lie_type("G2"));
    const Compactness c = classify_root_compactness(g2, GradingElement{{0, 1}});
    CHECK(c.noncompact.size() == 8);
    CHECK(c.compact.size() == 4);
    for (const Coords& a : c.noncompact) CHECK(std::find(c.noncompact.begin(), c.noncompact.end(), -a) != c.noncompact.end());
    CHECK(classify_root_compactness(g2, GradingElement{{0, 0}}).noncompact.empty());
    // Six positive roots of B3 have odd alpha_2 coefficient.
    CHECK(classify_root_compactness(RootSystem(parse_lie_type("B3")), GradingElement{{0, 1, 0}}).noncompact.size() == 12);
}

TEST_CASE("schubert dimensions from grading elements") {
    const RootSystem e7(parse_lie_type("E7"));
    CHECK(schubert_dim_from_grading(e7, 1, GradingElement{{-1, 0, 1, 0, 0, 0, 0}}) == 16);
    const RootSystem e8(parse_lie_type("E8"));
    CHECK(schubert_dim_from_grading(e8, 8, GradingElement{{0, 1, 0, 0, 0, 0, 0, -1}}) == 28);
    // T_w = 0 counts every root with alpha(S^i) = 1.
    CHECK(schubert_dim_from_grading(e8, 8, GradingElement{std::vector<int>(8, 0)}) == 56);
    CHECK(schubert_dim_from_grading(e7, 1, GradingElement{std::vector<int>(7, 0)}) == 32);
}

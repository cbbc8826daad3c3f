#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <string>

#include "doctest.h"
#include "syzygy/families.hpp"

using namespace syzygy;

namespace {

// K4 cycle matroid on edge labels 1=12, 2=13, 3=14, 4=23, 5=24, 6=34:
// spanning trees are the 3-subsets of edges that contain no triangle
std::vector<std::vector<int>> k4_trees() {
    const std::vector<std::vector<int>> triangles = {{1, 2, 4}, {1, 3, 5}, {2, 3, 6}, {4, 5, 6}};
    std::vector<std::vector<int>> out;
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b)
            for (int c = b + 1; c <= 6; ++c) {
                const std::vector<int> t = {a, b, c};
                if (std::find(triangles.begin(), triangles.end(), t) == triangles.end())
                    out.push_back(t);
            }
    return out;
}

}  // namespace

TEST_CASE("fano matroid") {
    const Matroid f = fano();
    CHECK(f.ground_size == 7);
    CHECK(f.bases.size() == 28);
    const Presentation p = matroidal_presentation(f);
    REQUIRE(p.r() == 28);
    for (const Monomial& g : p.gens) {
        CHECK(g.deg() == 3);
        CHECK(std::all_of(g.exponents().begin(), g.exponents().end(), [](int e) { return e <= 1; }));
    }
    // decreasing lex puts x1*x2*x4 first ({1,2,3} is a line) and x5*x6*x7 last
    CHECK(to_string(p.gens.front()) == "x1*x2*x4");
    CHECK(to_string(p.gens.back()) == "x5*x6*x7");
    CHECK(std::is_sorted(p.gens.begin(), p.gens.end(),
                         [](const Monomial& a, const Monomial& b) {
                             return compare_lex(a, b) > 0;
                         }));
    CHECK(is_matroidal_presentation(p));
    CHECK_FALSE(is_stable_presentation(p));
}

TEST_CASE("uniform matroids") {
    const Matroid u24 = uniform_matroid(2, 4);
    CHECK(u24.bases.size() == 6);
    const Matroid u35 = uniform_matroid(3, 5);
    CHECK(u35.bases.size() == 10);
    const Presentation p = matroidal_presentation(u24);
    REQUIRE(p.r() == 6);
    CHECK(to_string(p.gens.front()) == "x1*x2");
    CHECK(to_string(p.gens.back()) == "x3*x4");
    CHECK_THROWS_AS(uniform_matroid(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(uniform_matroid(5, 4), std::invalid_argument);
}

TEST_CASE("graphic matroid of the complete graph on four vertices") {
    const auto trees = k4_trees();
    REQUIRE(trees.size() == 16);
    const Matroid m = validate_matroid(6, trees);
    const Presentation p = matroidal_presentation(m);
    CHECK(p.r() == 16);
    CHECK(is_matroidal_presentation(p));
}

TEST_CASE("matroid validation rejections") {
    CHECK_THROWS_AS(validate_matroid(4, {{1, 2}, {3, 4}}), ExchangeFailure);
    try {
        validate_matroid(4, {{1, 2}, {3, 4}});
    } catch (const ExchangeFailure& e) {
        // no single swap from the other basis fixes the witness element
        CHECK(((e.b1 == std::vector<int>{1, 2} && e.b2 == std::vector<int>{3, 4}) ||
               (e.b1 == std::vector<int>{3, 4} && e.b2 == std::vector<int>{1, 2})));
        CHECK((e.x == e.b1[0] || e.x == e.b1[1]));
    }
    CHECK_THROWS_AS(validate_matroid(4, {}), std::invalid_argument);
    CHECK_THROWS_AS(validate_matroid(4, {{1, 2}, {1, 2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_matroid(4, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_matroid(4, {{1, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_matroid(4, {{1, 2}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("matroid restriction") {
    const Matroid sub = restrict_matroid(fano(), {1, 2, 3, 4});
    CHECK(sub.ground_size == 4);
    CHECK(sub.bases == std::vector<std::vector<int>>{{1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    // renumbering is ascending on the kept elements
    const Matroid shuffled = restrict_matroid(fano(), {2, 4, 1, 3});
    CHECK(shuffled.bases == sub.bases);
    CHECK_THROWS_AS(restrict_matroid(fano(), {1, 9}), std::invalid_argument);
    CHECK_THROWS_AS(restrict_matroid(fano(), {1, 1}), std::invalid_argument);
    // {1,2,3} is a line, so no basis survives
    CHECK_THROWS_AS(restrict_matroid(fano(), {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("stable ideals") {
    const Presentation p =
        validate_stable(2, {parse_monomial("x2^2", 2), parse_monomial("x1^2", 2),
                            parse_monomial("x1*x2", 2)});
    // reordered to decreasing lex before verification
    REQUIRE(p.r() == 3);
    CHECK(to_string(p.gens[0]) == "x1^2");
    CHECK(to_string(p.gens[1]) == "x1*x2");
    CHECK(to_string(p.gens[2]) == "x2^2");
    CHECK(p.crit == std::vector<std::vector<int>>{{}, {1}, {1}});
    CHECK(is_stable_presentation(p));
    CHECK_FALSE(is_matroidal_presentation(p));

    CHECK_NOTHROW(validate_stable(3, {parse_monomial("x1", 3)}));

    CHECK_THROWS_AS(validate_stable(2, {parse_monomial("x1*x2", 2)}), NotStable);
    try {
        validate_stable(2, {parse_monomial("x1*x2", 2)});
    } catch (const NotStable& e) {
        CHECK(to_string(e.u) == "x1*x2");
        CHECK(e.var == 1);  // x1 * u / x2 = x1^2 escapes
    }
    CHECK_THROWS_AS(validate_stable(2, {parse_monomial("x1^2", 2), parse_monomial("x2^2", 2)}),
                    NotStable);
}

TEST_CASE("random stable ideals are stable, minimal, crit-monotone") {
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const int maxdeg = 2 + static_cast<int>(rng() % 3);
        const auto gens = random_stable_ideal(n, maxdeg, 3, rng);
        REQUIRE_FALSE(gens.empty());
        for (const Monomial& g : gens) CHECK(g.deg() <= maxdeg);
        const Presentation p = validate_stable(n, gens);  // throws on any defect
        CHECK(static_cast<bool>(is_crit_monotone(p)));
        CHECK(is_stable_presentation(p));
    }
}

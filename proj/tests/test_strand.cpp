#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "syzygy/families.hpp"
#include "syzygy/strand.hpp"

using namespace syzygy;

namespace {

Presentation pres(int n, const std::vector<std::string>& texts) {
    std::vector<Monomial> gens;
    for (const auto& t : texts) gens.push_back(parse_monomial(t, n));
    return verify_linear_quotients(n, gens);
}

Presentation fano_sub() { return pres(4, {"x1*x2*x4", "x1*x3*x4", "x2*x3*x4"}); }

std::vector<std::vector<mpz_class>> mat(const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<mpz_class>> out;
    for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
    return out;
}

}  // namespace

TEST_CASE("integer matrix rank") {
    CHECK(rank_bareiss({}) == 0);
    CHECK(rank_bareiss(mat({{0, 0}, {0, 0}})) == 0);
    CHECK(rank_bareiss(mat({{1, 0}, {0, 1}})) == 2);
    CHECK(rank_bareiss(mat({{1, 2}, {2, 4}})) == 1);
    CHECK(rank_bareiss(mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
    CHECK(rank_bareiss(mat({{0, 1}, {1, 0}, {1, 1}})) == 2);
    CHECK(rank_bareiss(mat({{2, 3, 5}, {7, 11, 13}})) == 2);
    // needs pivoting: first pivot position is zero
    CHECK(rank_bareiss(mat({{0, 2}, {3, 0}})) == 2);
    // values that overflow fixed width arithmetic if handled naively
    std::vector<std::vector<mpz_class>> big(8, std::vector<mpz_class>(8));
    mpz_class v = 1;
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            v *= 1000003;
            big[i][k] = v + (i == k);
        }
    CHECK(rank_bareiss(big) == 8);
}

TEST_CASE("multidegree enumeration") {
    const auto below = multidegrees_below(parse_monomial("x1^2*x2", 2));
    CHECK(below.size() == 6);
    CHECK(multidegrees_below(Monomial::one(3)).size() == 1);
    const auto cube = multidegrees_below(parse_monomial("x1*x2*x3*x4", 4));
    CHECK(cube.size() == 16);
}

TEST_CASE("basis multidegree bound") {
    const Resolution r = build_resolution(fano_sub(), Mode::ek);
    CHECK(basis_mdeg_bound(r) == parse_monomial("x1*x2*x3*x4", 4));
    const Resolution s = build_resolution(pres(2, {"x1^2", "x1*x2", "x2^2"}), Mode::ek);
    CHECK(basis_mdeg_bound(s) == parse_monomial("x1^2*x2^2", 2));
}

TEST_CASE("strand exactness holds for resolutions of every family") {
    for (Mode mode : {Mode::ek, Mode::generic}) {
        const Resolution r = build_resolution(fano_sub(), mode);
        const StrandReport rep = strand_exactness_oracle(r, basis_mdeg_bound(r));
        CHECK(rep.ok);
        CHECK(rep.checks.size() == 16);
        CHECK(rep.witness.empty());
        for (const StrandCheck& c : rep.checks) {
            CHECK(c.exact);
            CHECK(c.fail_position == 0);
        }
    }
    const Resolution s = build_resolution(pres(2, {"x1^2", "x1*x2", "x2^2"}), Mode::ek);
    CHECK(strand_exactness_oracle(s, basis_mdeg_bound(s)).ok);
    const Resolution chain =
        build_resolution(pres(4, {"x1*x2", "x2*x3", "x3*x4"}), Mode::generic);
    CHECK(strand_exactness_oracle(chain, basis_mdeg_bound(chain)).ok);
}

TEST_CASE("strand dimensions and ranks are pinned on the running example") {
    const Resolution r = build_resolution(fano_sub(), Mode::ek);
    const Monomial top = parse_monomial("x1*x2*x3*x4", 4);
    const StrandReport rep = strand_exactness_multi(r, {top, parse_monomial("x1*x2*x4", 4),
                                                        parse_monomial("x1*x3", 4)});
    REQUIRE(rep.checks.size() == 3);
    // full multidegree: all three generators and both syzygies contribute
    CHECK(rep.checks[0].dims == std::vector<int>{3, 2});
    CHECK(rep.checks[0].ranks == std::vector<int>{1, 2});
    // a generator multidegree: only that generator contributes
    CHECK(rep.checks[1].dims == std::vector<int>{1, 0});
    CHECK(rep.checks[1].ranks == std::vector<int>{1, 0});
    // outside the ideal: empty strand
    CHECK(rep.checks[2].dims == std::vector<int>{0, 0});
    CHECK(rep.checks[2].ranks == std::vector<int>{0, 0});
    for (const StrandCheck& c : rep.checks) CHECK(c.exact);
}

TEST_CASE("parallel strand sweep agrees with the serial reference") {
    for (const Presentation& p :
         {fano_sub(), pres(2, {"x1^2", "x1*x2", "x2^2"}),
          matroidal_presentation(uniform_matroid(2, 4))}) {
        const Resolution r = build_resolution(p, Mode::ek);
        const Monomial bound = basis_mdeg_bound(r);
        const StrandReport serial = strand_exactness_oracle(r, bound);
        const StrandReport parallel = strand_exactness_oracle_parallel(r, bound);
        CHECK(serial.ok == parallel.ok);
        REQUIRE(serial.checks.size() == parallel.checks.size());
        for (size_t i = 0; i < serial.checks.size(); ++i)
            CHECK(serial.checks[i] == parallel.checks[i]);
    }
}

TEST_CASE("a sign-corrupted differential fails the composite check") {
    Resolution r = build_resolution(fano_sub(), Mode::ek);
    auto& image = r.diff.at(BasisElement{{1}, 2});
    const auto term = *image.terms().begin();
    image.add(-2 * term.second, term.first.first, term.first.second);
    const auto failure = verify_d_squared(r);
    REQUIRE(failure.has_value());
    CHECK(failure->at == BasisElement{{1}, 2});
}

TEST_CASE("a rank-deficient differential fails the strand check with a witness") {
    Resolution r = build_resolution(fano_sub(), Mode::ek);
    // overwrite one syzygy with a copy of the other: the strand loses a rank
    r.diff.at(BasisElement{{1}, 2}) = r.diff.at(BasisElement{{2}, 1});
    const std::vector<StrandReport> reports = {
        strand_exactness_oracle(r, basis_mdeg_bound(r)),
        strand_exactness_oracle_parallel(r, basis_mdeg_bound(r))};
    for (const StrandReport& rep : reports) {
        CHECK_FALSE(rep.ok);
        CHECK_FALSE(rep.witness.empty());
        bool found_failure = false;
        for (const StrandCheck& c : rep.checks) found_failure |= !c.exact;
        CHECK(found_failure);
        // the full multidegree strand breaks at the lowest position: the lost
        // syzygy leaves homology between the generators and the augmentation
        for (const StrandCheck& c : rep.checks)
            if (!c.exact) {
                CHECK(c.alpha == parse_monomial("x1*x2*x3*x4", 4));
                CHECK(c.fail_position == 0);
            }
    }
}

TEST_CASE("the ring strand detects membership mismatches") {
    const Resolution r = build_resolution(fano_sub(), Mode::ek);
    // multidegrees strictly inside the ideal have augmentation rank one
    const StrandReport rep =
        strand_exactness_multi(r, {parse_monomial("x1*x2*x3*x4^2", 4)});
    REQUIRE(rep.checks.size() == 1);
    CHECK(rep.checks[0].exact);
    CHECK(rep.checks[0].ranks[0] == 1);
}

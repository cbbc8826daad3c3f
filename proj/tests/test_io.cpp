#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <string>

#include "doctest.h"
#include "syzygy/io.hpp"

using namespace syzygy;

namespace {

const char* kIdeal = R"({"n": 4, "generators": ["x1*x2*x4", "x1*x3*x4", "x2*x3*x4"]})";

Presentation pres(int n, const std::vector<std::string>& texts) {
    std::vector<Monomial> gens;
    for (const auto& t : texts) gens.push_back(parse_monomial(t, n));
    return verify_linear_quotients(n, gens);
}

}  // namespace

TEST_CASE("ideal inputs parse and verify") {
    const ParsedInput in = parse_input_text(kIdeal);
    CHECK_FALSE(in.matroid.has_value());
    CHECK(in.n == 4);
    CHECK(in.gens.size() == 3);
    CHECK(in.order == "given");
    const Presentation p = presentation_from_input(in);
    CHECK(p.crit == std::vector<std::vector<int>>{{}, {2}, {1}});
}

TEST_CASE("declex re-sorts the generators before verification") {
    const ParsedInput in = parse_input_text(
        R"({"n": 4, "generators": ["x2*x3*x4", "x1*x3*x4", "x1*x2*x4"], "order": "declex"})");
    const Presentation p = presentation_from_input(in);
    CHECK(to_string(p.gens[0]) == "x1*x2*x4");
    CHECK(to_string(p.gens[1]) == "x1*x3*x4");
    CHECK(to_string(p.gens[2]) == "x2*x3*x4");
    // the same list in the given order is not a linear-quotient order
    const ParsedInput given = parse_input_text(
        R"({"n": 4, "generators": ["x2*x3*x4", "x1*x3*x4", "x1*x2*x4"]})");
    CHECK_NOTHROW(presentation_from_input(given));  // reversed order also works here
}

TEST_CASE("matroid inputs go through basis validation") {
    const ParsedInput in = parse_input_text(
        R"({"ground_size": 4, "bases": [[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]})");
    REQUIRE(in.matroid.has_value());
    const Presentation p = presentation_from_input(in);
    CHECK(p.r() == 6);
    CHECK(to_string(p.gens[0]) == "x1*x2");
    CHECK_THROWS_AS(parse_input_text(R"({"ground_size": 4, "bases": [[1,2],[3,4]]})"),
                    ExchangeFailure);
}

TEST_CASE("input rejection: malformed shapes") {
    CHECK_THROWS_AS(parse_input_text("not json at all {"), InputError);
    CHECK_THROWS_AS(parse_input_text(R"({"generators": ["x1"]})"), InputError);
    CHECK_THROWS_AS(parse_input_text(R"({"n": 0, "generators": ["x1"]})"), InputError);
    CHECK_THROWS_AS(parse_input_text(R"({"n": -2, "generators": ["x1"]})"), InputError);
    CHECK_THROWS_AS(parse_input_text(R"({"n": 2, "generators": []})"), InputError);
    CHECK_THROWS_AS(parse_input_text(R"({"n": 2, "generators": ["x1"], "order": "random"})"),
                    InputError);
    CHECK_THROWS_AS(parse_input_text(R"({"n": 2, "generators": ["x3"]})"), InputError);
    CHECK_THROWS_AS(parse_input_text(R"({"n": 2, "generators": ["x1**2"]})"), InputError);
    CHECK_THROWS_AS(parse_input_text(R"({"n": 2, "generators": [7]})"), InputError);
    CHECK_THROWS_AS(parse_input_text(R"({"ground_size": "four", "bases": [[1,2]]})"), InputError);
}

TEST_CASE("missing files raise input errors") {
    CHECK_THROWS_AS(load_input("/nonexistent/path/ideal.json"), InputError);
    CHECK_THROWS_AS(read_file("/nonexistent/path/file.txt"), InputError);
}

TEST_CASE("file round-trip") {
    const std::string path = "/tmp/syzygy_io_test.json";
    write_file(path, kIdeal);
    const ParsedInput in = load_input(path);
    CHECK(in.gens.size() == 3);
    std::remove(path.c_str());
}

TEST_CASE("ideal serialization carries the order and critical sets") {
    const Presentation p = pres(4, {"x1*x2*x4", "x1*x3*x4", "x2*x3*x4"});
    const std::string text = ideal_to_json(p);
    CHECK(text.find("x1*x2*x4") != std::string::npos);
    const ParsedInput back = parse_input_text(text);
    CHECK(back.n == 4);
    CHECK(back.gens == p.gens);
}

TEST_CASE("resolution round-trip preserves basis, differentials, and mode") {
    for (Mode mode : {Mode::ek, Mode::generic}) {
        const Resolution r =
            build_resolution(pres(4, {"x1*x2*x4", "x1*x3*x4", "x2*x3*x4"}), mode);
        const Resolution back = resolution_from_json(resolution_to_json(r));
        CHECK(back.mode == mode);
        CHECK(back.pres.gens == r.pres.gens);
        CHECK(back.pres.crit == r.pres.crit);
        CHECK(back.basis == r.basis);
        REQUIRE(back.diff.size() == r.diff.size());
        for (const auto& [b, chain] : r.diff) CHECK(back.diff.at(b).terms() == chain.terms());
    }
}

TEST_CASE("coefficients beyond machine range survive the round-trip") {
    Resolution r = build_resolution(pres(4, {"x1*x2*x4", "x1*x3*x4", "x2*x3*x4"}), Mode::ek);
    mpz_class huge;
    mpz_ui_pow_ui(huge.get_mpz_t(), 10, 30);  // 10^30 overflows any fixed width
    auto& chain = r.diff.at(BasisElement{{1}, 2});
    const auto term = *chain.terms().begin();
    chain.add(huge, term.first.first, term.first.second);
    const Resolution back = resolution_from_json(resolution_to_json(r));
    CHECK(back.diff.at(BasisElement{{1}, 2}).terms() == chain.terms());
}

TEST_CASE("resolution deserialization rejects corrupted payloads") {
    CHECK_THROWS_AS(resolution_from_json("{"), InputError);
    CHECK_THROWS_AS(resolution_from_json(R"({"n": 2})"), InputError);
}

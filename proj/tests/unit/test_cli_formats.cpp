#include <doctest.h>

#include "algpos/matrix.hpp"
#include "algpos/sign_pattern.hpp"

using namespace algpos;

// shell-facing grammar corners the CLI depends on

TEST_CASE("matrix grammar accepts commas, whitespace and scientific notation") {
    const RealMatrix a = parse_matrix(" 1,2 ; -3e-1  4 ");
    CHECK(a.n() == 2);
    CHECK(a(1, 0) == doctest::Approx(-0.3));
    CHECK(parse_matrix("1 1; 1 1")(0, 0) == 1.0);
}

TEST_CASE("pattern grammar is strict about its alphabet") {
    CHECK(parse_pattern("0+0/00+/+00").n() == 3);
    CHECK(parse_pattern(" 0+0 / 00+ / +00 ").to_string() == "0+0/00+/+00");
    CHECK_THROWS_AS(parse_pattern("0+0/00+/+0x"), ParseError);
}

TEST_CASE("polynomial pretty printing") {
    CHECK(Polynomial{{1.0, 0.0, 1.0}}.to_string() == "x^2 + 1");
    CHECK(Polynomial{{0.0, -2.0}}.to_string() == "-2x");
    CHECK(Polynomial{{0.0}}.to_string() == "0");
}

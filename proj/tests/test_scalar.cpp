#include <doctest.h>

#include "parrondo/scalar.hpp"

#include <string>

using namespace parrondo;

TEST_CASE("parse_rational handles fractions, integers and decimals") {
    CHECK(parse_rational("1/3") == Rational(1, 3));
    CHECK(parse_rational("-3/7") == Rational(-3, 7));
    CHECK(parse_rational("2") == Rational(2));
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK(parse_rational("-0.5") == Rational(-1, 2));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(parse_rational("2.5e2") == Rational(250));
    CHECK(parse_rational("193387599/6704101000") == Rational("193387599/6704101000"));
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), ValidationError);
    CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
    CHECK_THROWS_AS(parse_rational("1/"), ValidationError);
    CHECK_THROWS_AS(parse_rational("1..2"), ValidationError);
    CHECK_THROWS_AS(parse_rational("1e"), ValidationError);
}

TEST_CASE("fraction literals are detected for mode selection") {
    CHECK(is_fraction_literal("1/3"));
    CHECK_FALSE(is_fraction_literal("0.333"));
}

TEST_CASE("scalar formatting") {
    CHECK(rational_str(Rational(48, 1609)) == "48/1609");
    CHECK(rational_str(Rational(0)) == "0/1");
    // 17 significant digits round-trip doubles
    double x = 0.028846318309917031;
    CHECK(std::stod(double_str(x)) == x);
    CHECK(double_str(0.5) == "0.5");
}

TEST_CASE("exact arithmetic is exact") {
    Rational a(1, 3);
    CHECK(a + a + a == Rational(1));
    CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
}

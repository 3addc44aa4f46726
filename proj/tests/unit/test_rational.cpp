#include "doctest.h"
#include "helpers.hpp"
#include "treeline/rational.hpp"

using namespace treeline;
using treeline::testing::thrown_kind;

TEST_CASE("factorials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == BigCount("2432902008176640000"));
    CHECK(thrown_kind([] { factorial(-1); }) == ErrorKind::invalid_argument);
}

TEST_CASE("make_rational canonicalizes") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(-2, 4) == make_rational(-1, 2));
    CHECK(make_rational(2, -4) == make_rational(-1, 2));
    CHECK(make_rational(0, 7) == Rational(0));
    CHECK(thrown_kind([] { make_rational(1, 0); }) == ErrorKind::invalid_argument);
}

TEST_CASE("fraction strings") {
    CHECK(format_fraction(make_rational(8, 3)) == "8/3");
    CHECK(format_fraction(make_rational(10, 2)) == "5");
    CHECK(format_fraction(Rational(0)) == "0");
    CHECK(format_fraction(make_rational(-7, 2)) == "-7/2");
}

TEST_CASE("decimal rendering rounds ties half to even") {
    CHECK(format_decimal(make_rational(8, 3)) == "2.666667");
    CHECK(format_decimal(Rational(5)) == "5.000000");
    CHECK(format_decimal(make_rational(1, 2), 0) == "0");   // 0.5 -> even 0
    CHECK(format_decimal(make_rational(3, 2), 0) == "2");   // 1.5 -> even 2
    CHECK(format_decimal(make_rational(5, 2), 0) == "2");   // 2.5 -> even 2
    CHECK(format_decimal(make_rational(1, 8), 2) == "0.12");   // .125 -> even .12
    CHECK(format_decimal(make_rational(3, 8), 2) == "0.38");   // .375 -> even .38
    CHECK(format_decimal(make_rational(1, 16), 3) == "0.062");
    CHECK(format_decimal(make_rational(19, 4)) == "4.750000");
    CHECK(format_decimal(make_rational(1, 3), 1) == "0.3");
    CHECK(format_decimal(make_rational(2, 3), 1) == "0.7");
    CHECK(format_decimal(make_rational(999999999999LL, 1000000000000LL)) == "1.000000");
}

TEST_CASE("doubles") {
    CHECK(to_double(make_rational(1, 2)) == 0.5);
    CHECK(to_double(Rational(3)) == 3.0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chvatal/rational.hpp"

using namespace chvatal;

TEST_CASE("canonical form") {
    Rational r = make_rational(6, -4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(is_canonical(r));
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("string round trip") {
    CHECK(to_string(make_rational(11, 16)) == "11/16");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(to_string(make_rational(-3, 7)) == "-3/7");
    CHECK(rational_from_string("189/256") == make_rational(189, 256));
    CHECK(rational_from_string("-4/6") == make_rational(-2, 3));
    CHECK(rational_from_string("7") == 7);
    CHECK_THROWS_AS(rational_from_string("x/y"), std::invalid_argument);
}

TEST_CASE("pow_rational") {
    CHECK(pow_rational(make_rational(-1, 5), 4) == make_rational(1, 625));
    CHECK(pow_rational(make_rational(2, 3), 0) == 1);
    CHECK(pow_rational(Rational(0), 0) == 1);
}

TEST_CASE("decimal rendering") {
    CHECK(decimal_string(make_rational(11, 16), 4) == "0.6875");
    CHECK(decimal_string(make_rational(1, 3), 6) == "0.333333");
    CHECK(decimal_string(make_rational(2, 3), 6) == "0.666667");
    CHECK(decimal_string(make_rational(-1, 2), 2) == "-0.50");
    CHECK(decimal_string(Rational(3), 0) == "3");
}

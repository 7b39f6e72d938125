#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chvatal/lemmas.hpp"

using namespace chvatal;

TEST_CASE("b_value examples") {
    CHECK(b_value(4, 2) == make_rational(1, 16));
    CHECK(b_value(3, 1) == make_rational(2, 27));
    CHECK(b_value(2, 0) == 0);
    CHECK_THROWS_AS(b_value(4, 3), std::domain_error);
}

TEST_CASE("lemma1 conditions at (4,2)") {
    auto c = lemma1_conditions(4, 2);
    CHECK(c.direct);
    CHECK(c.main);
    CHECK(c.eq3.has_value());
    CHECK(*c.eq3);
    CHECK(c.eq4);
    CHECK(c.all_agree());
    CHECK(c.direct_lhs == make_rational(11, 16));
    CHECK(c.direct_rhs == make_rational(175, 256));
    CHECK(c.main_lhs == make_rational(65, 1024));
    CHECK(c.main_rhs == make_rational(64, 1024));
    CHECK(c.eq3_lhs == make_rational(65, 32));
    CHECK(c.eq3_rhs == 2);
    CHECK(c.eq4_lhs == make_rational(109, 108));
    CHECK(c.eq4_rhs == 1);
}

TEST_CASE("lemma1 conditions at (5,3): decrease fails every way") {
    auto c = lemma1_conditions(5, 3);
    CHECK(!c.direct);
    CHECK(!c.main);
    CHECK(c.eq3.has_value());
    CHECK(!*c.eq3);
    CHECK(!c.eq4);
    CHECK(c.all_agree());
}

TEST_CASE("lemma1 at m = 0 skips the shifted form") {
    auto c = lemma1_conditions(2, 0);
    CHECK(!c.eq3.has_value());
    CHECK(c.all_agree());
}

TEST_CASE("lemma1 at (3,1)") {
    auto c = lemma1_conditions(3, 1);
    CHECK(c.main_lhs == make_rational(7, 81));
    CHECK(c.main_rhs == make_rational(6, 81));
    CHECK(c.direct);
    CHECK(c.all_agree());
}

TEST_CASE("lemma1 table overload agrees and the domain is guarded") {
    auto t = q_table(9);
    for (long m = 0; m <= 7; ++m) {
        auto a = lemma1_conditions(9, m);
        auto b = lemma1_conditions(t, m);
        CHECK(a.direct == b.direct);
        CHECK(a.eq4_lhs == b.eq4_lhs);
    }
    CHECK_THROWS_AS(lemma1_conditions(4, 3), std::domain_error);
}

TEST_CASE("lemma1 equivalence and switch agreement over a range") {
    for (long n = 2; n <= 60; ++n) {
        auto t = q_table(n);
        for (long m = 0; m <= n - 2; ++m) {
            auto c = lemma1_conditions(t, m);
            CHECK(c.all_agree());
            CHECK(c.direct == switch_predicate(n, m));
        }
    }
}

TEST_CASE("g_of examples") {
    CHECK(g_of(4, 2, Rational(1)) == make_rational(8, 9));
    CHECK(g_of(4, 2, make_rational(1, 2)) == make_rational(25, 24));
    CHECK(g_of(4, 2, Rational(0)) == 1);
    CHECK(g_of(5, 1, Rational(1)) == make_rational(32, 27));
}

TEST_CASE("h_of examples") {
    CHECK(h_of(4, 2) == make_rational(109, 108));
    CHECK(h_of(4, 1) == make_rational(109, 96));
    CHECK(h_of(3, 1) == make_rational(13, 12));
    CHECK_THROWS_AS(h_of(4, 3), std::domain_error);
}

TEST_CASE("h_of matches the eq-4 left side") {
    for (long n = 3; n <= 25; ++n)
        for (long m = 0; m <= n - 2; ++m)
            CHECK(h_of(n, m) == lemma1_conditions(n, m).eq4_lhs);
}

TEST_CASE("lemma2 scan small cases") {
    auto s = lemma2_scan(4);
    CHECK(s.h_values.size() == 2);
    CHECK(s.h_values[0].second == make_rational(109, 96));
    CHECK(s.h_values[1].second == make_rational(109, 108));
    CHECK(s.strictly_decreasing);
    CHECK(s.g_all_decreasing);
    for (const auto& g : s.g_checks) CHECK(g.pass);

    CHECK_THROWS_AS(lemma2_scan(3), std::domain_error);
}

TEST_CASE("lemma2 scan over a range") {
    for (long n = 4; n <= 60; ++n) {
        auto s = lemma2_scan(n);
        CHECK(s.strictly_decreasing);
        CHECK(s.g_all_decreasing);
    }
}

TEST_CASE("custom v grid") {
    auto s = lemma2_scan(10, {make_rational(1, 3), Rational(1)});
    CHECK(s.g_checks.size() == 2);
    CHECK(s.g_all_decreasing);
}

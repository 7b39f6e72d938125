#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chvatal/polyrat.hpp"

using namespace chvatal;

namespace {

RatPoly poly(std::initializer_list<Rational> cs) {
    return RatPoly(std::vector<Rational>(cs));
}

// small random polynomials for property checks
std::mt19937 rng(20240817);

Rational random_rational() {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return make_rational(num(rng), den(rng));
}

RatPoly random_poly() {
    std::uniform_int_distribution<int> deg(0, 6);
    std::vector<Rational> cs(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : cs) c = random_rational();
    return RatPoly(std::move(cs));
}

}  // namespace

TEST_CASE("affine_power examples") {
    CHECK(affine_power(1, 0, 5) == poly({1}));
    CHECK(affine_power(1, make_rational(-1, 2), 2) ==
          poly({1, -1, make_rational(1, 4)}));
    CHECK(affine_power(1, make_rational(1, 3), 0) == poly({1}));
    CHECK(affine_power(1, make_rational(-1, 5), 4) ==
          poly({1, make_rational(-4, 5), make_rational(6, 25), make_rational(-4, 125),
                make_rational(1, 625)}));
}

TEST_CASE("affine_power degree and zero-exponent convention") {
    CHECK(affine_power(make_rational(1, 2), 1, 7).degree() == 7);
    CHECK(affine_power(0, 0, 0) == poly({1}));
    CHECK(affine_power(0, 1, 3) == poly({0, 0, 0, 1}));
}

TEST_CASE("poly_mul examples") {
    CHECK(poly_mul(poly({1, make_rational(-1, 2)}), poly({1, make_rational(1, 2)})) ==
          poly({1, 0, make_rational(-1, 4)}));
    RatPoly p = random_poly();
    CHECK(poly_mul(poly({1}), p) == p);
    // (1 - v/3)^2 (1 + v): the eq-4 integrand for n=4, m=2
    CHECK(poly_mul(affine_power(1, make_rational(-1, 3), 2), poly({1, 1})) ==
          poly({1, make_rational(1, 3), make_rational(-5, 9), make_rational(1, 9)}));
}

TEST_CASE("poly_integrate examples") {
    CHECK(poly_integrate(poly({1}), 0, 1) == 1);
    CHECK(poly_integrate(poly({0, 0, 0, 1}), make_rational(1, 2),
                         make_rational(3, 4)) == make_rational(65, 1024));
    RatPoly p = poly_mul(affine_power(1, make_rational(-1, 3), 2), poly({1, 1}));
    CHECK(poly_integrate(p, 0, 1) == make_rational(109, 108));
}

TEST_CASE("integration is linear") {
    for (int i = 0; i < 50; ++i) {
        RatPoly p = random_poly(), q = random_poly();
        Rational a = random_rational(), b = random_rational();
        CHECK(poly_integrate(poly_add(p, q), a, b) ==
              poly_integrate(p, a, b) + poly_integrate(q, a, b));
    }
}

TEST_CASE("integration is additive over adjacent intervals") {
    for (int i = 0; i < 50; ++i) {
        RatPoly p = random_poly();
        Rational a = random_rational(), b = a + 1, c = b + make_rational(1, 3);
        CHECK(poly_integrate(p, a, c) ==
              poly_integrate(p, a, b) + poly_integrate(p, b, c));
    }
}

TEST_CASE("affine powers multiply by adding exponents") {
    for (int i = 0; i < 20; ++i) {
        Rational c0 = random_rational(), c1 = random_rational();
        std::uniform_int_distribution<unsigned long> e(0, 5);
        unsigned long p = e(rng), q = e(rng);
        CHECK(poly_mul(affine_power(c0, c1, p), affine_power(c0, c1, q)) ==
              affine_power(c0, c1, p + q));
    }
}

TEST_CASE("nonnegative integrand gives nonnegative integral") {
    for (int i = 0; i < 30; ++i) {
        RatPoly p = random_poly();
        std::vector<Rational> abs_cs;
        for (const auto& c : p.coeffs()) abs_cs.push_back(abs(c));
        RatPoly ap(std::move(abs_cs));
        CHECK(poly_integrate(ap, 0, make_rational(7, 3)) >= 0);
    }
}

TEST_CASE("all operations keep coefficients canonical") {
    for (int i = 0; i < 30; ++i) {
        RatPoly r = poly_mul(random_poly(), random_poly());
        for (const auto& c : r.coeffs()) CHECK(is_canonical(c));
        CHECK((r.is_zero() || r.coeffs().back() != 0));
    }
}

TEST_CASE("zero polynomial conventions") {
    RatPoly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(poly_mul(z, random_poly()).is_zero());
    CHECK(poly_integrate(z, 0, 5) == 0);
    CHECK(poly({Rational(0), Rational(0)}).is_zero());
}

#include "chvatal/lemmas.hpp"

#include <stdexcept>

#include "chvatal/polyrat.hpp"

namespace chvatal {

Rational b_value(long n, long m) {
    if (n < 2 || m < 0 || m > n - 2)
        throw std::domain_error("b_value: need n >= 2 and 0 <= m <= n-2");
    Rational p = make_rational(m, n);
    Rational q = make_rational(n - m, n);
    return pow_rational(p, static_cast<unsigned long>(m + 1)) *
           pow_rational(q, static_cast<unsigned long>(n - m - 1)) /
           static_cast<unsigned long>(n - m - 1);
}

Lemma1Conditions lemma1_conditions(const TailTable& table, long m) {
    const long n = table.n;
    if (m < 0 || m > n - 2)
        throw std::domain_error("lemma1_conditions: need 0 <= m <= n-2");

    Lemma1Conditions c;
    c.n = n;
    c.m = m;

    c.direct_lhs = table.q[m];
    c.direct_rhs = table.q[m + 1];
    c.direct = c.direct_lhs >= c.direct_rhs;

    // main: integral of x^{m+1}(1-x)^{n-m-2} over [m/n, (m+1)/n] vs b_m
    RatPoly main_integrand =
        poly_mul(affine_power(0, 1, static_cast<unsigned long>(m + 1)),
                 affine_power(1, -1, static_cast<unsigned long>(n - m - 2)));
    c.main_lhs = poly_integrate(main_integrand, make_rational(m, n),
                                make_rational(m + 1, n));
    c.main_rhs = b_value(n, m);
    c.main = c.main_lhs >= c.main_rhs;

    // eq3: integral of (1+t/m)^{m+1} (1-t/(n-m))^{n-m-2} over [0,1]
    // vs (n-m)/(n-m-1); the integrand divides by m, so m = 0 is skipped
    if (m >= 1) {
        RatPoly eq3_integrand =
            poly_mul(affine_power(1, make_rational(1, m),
                                  static_cast<unsigned long>(m + 1)),
                     affine_power(1, make_rational(-1, n - m),
                                  static_cast<unsigned long>(n - m - 2)));
        c.eq3_lhs = poly_integrate(eq3_integrand, Rational(0), Rational(1));
        c.eq3_rhs = make_rational(n - m, n - m - 1);
        c.eq3 = c.eq3_lhs >= c.eq3_rhs;
    }

    // eq4: h(m) vs 1
    c.eq4_lhs = h_of(n, m);
    c.eq4_rhs = 1;
    c.eq4 = c.eq4_lhs >= c.eq4_rhs;
    return c;
}

Lemma1Conditions lemma1_conditions(long n, long m) {
    if (n < 2) throw std::domain_error("lemma1_conditions: need n >= 2");
    return lemma1_conditions(q_table(n), m);
}

Rational g_of(long n, long m, const Rational& v) {
    if (n < 3 || m < 1 || m > n - 2)
        throw std::domain_error("g_of: need n >= 3 and 1 <= m <= n-2");
    Rational a = 1 - v / static_cast<unsigned long>(m + 1);
    Rational b = 1 + v / static_cast<unsigned long>(n - m - 1);
    return pow_rational(a, static_cast<unsigned long>(m)) *
           pow_rational(b, static_cast<unsigned long>(n - m - 1));
}

Rational h_of(long n, long m) {
    // also serves lemma1's eq4 left-hand side, where m may be 0 or n >= 2
    if (n < 2 || m < 0 || m > n - 2)
        throw std::domain_error("h_of: need n >= 2 and 0 <= m <= n-2");
    RatPoly integrand =
        poly_mul(affine_power(1, make_rational(-1, m + 1),
                              static_cast<unsigned long>(m)),
                 affine_power(1, make_rational(1, n - m - 1),
                              static_cast<unsigned long>(n - m - 1)));
    return poly_integrate(integrand, Rational(0), Rational(1));
}

std::vector<Rational> default_v_grid() {
    return {make_rational(1, 4), make_rational(1, 2), make_rational(3, 4),
            Rational(1)};
}

Lemma2Scan lemma2_scan(long n, const std::vector<Rational>& v_grid) {
    if (n < 4) throw std::domain_error("lemma2_scan: need n >= 4");
    Lemma2Scan scan;
    scan.n = n;
    scan.strictly_decreasing = true;
    for (long m = 1; m <= n - 2; ++m) {
        scan.h_values.emplace_back(m, h_of(n, m));
        if (m > 1 && scan.h_values[m - 2].second <= scan.h_values[m - 1].second)
            scan.strictly_decreasing = false;
    }
    scan.g_all_decreasing = true;
    for (const auto& v : v_grid) {
        // one record per grid point; m marks the first failing step, if any
        Lemma2Scan::GCheck gc{v, n - 2, true};
        Rational prev = g_of(n, 1, v);
        for (long m = 2; m <= n - 2; ++m) {
            Rational cur = g_of(n, m, v);
            if (prev <= cur) {
                gc.pass = false;
                gc.m = m - 1;
                break;
            }
            prev = std::move(cur);
        }
        if (!gc.pass) scan.g_all_decreasing = false;
        scan.g_checks.push_back(std::move(gc));
    }
    return scan;
}

}  // namespace chvatal

#include "chvatal/proofsteps.hpp"

#include <stdexcept>

#include "chvatal/polyrat.hpp"

namespace chvatal {

namespace {

// (1 + sign*v/denom)^expnt, with the zero-exponent convention
RatPoly affine_factor(int sign, long denom, long expnt) {
    if (expnt == 0) return RatPoly::constant(1);
    if (denom == 0) throw std::domain_error("affine_factor: zero denominator");
    return affine_power(1, make_rational(sign, denom),
                        static_cast<unsigned long>(expnt));
}

Rational product_integral(int s1, long d1, long e1, int s2, long d2, long e2) {
    return poly_integrate(poly_mul(affine_factor(s1, d1, e1), affine_factor(s2, d2, e2)),
                          Rational(0), Rational(1));
}

}  // namespace

Rational ineq8_first(long s) {
    if (s < 1) throw std::domain_error("ineq8_first: need s >= 1");
    return product_integral(-1, 2 * s, 2 * s - 1, +1, s, s);
}

Rational I_of(long s) {
    if (s < 1) throw std::domain_error("I_of: need s >= 1");
    return product_integral(-1, 2 * s + 1, 2 * s, +1, s == 1 ? 1 : s - 1, s - 1);
}

Rational J_of(long s, int r) {
    if (s < 1) throw std::domain_error("J_of: need s >= 1");
    if (r != 1 && r != 2) throw std::domain_error("J_of: need r in {1,2}");
    return product_integral(-1, 2 * s + 1, 2 * s, +1, s + r - 1, s + r - 1);
}

Rational H_of(long s, int r) {
    if (s < 1) throw std::domain_error("H_of: need s >= 1");
    if (r != 1 && r != 2) throw std::domain_error("H_of: need r in {1,2}");
    long e2 = s + r - 2;
    return product_integral(-1, 2 * s + 2, 2 * s + 1, +1, e2 == 0 ? 1 : e2, e2);
}

Rational cubic_truncation(long s, const Rational& v, Truncation variant) {
    long d1, d2;
    if (variant == Truncation::Gamma) {
        if (s < 2) throw std::domain_error("cubic_truncation: gamma needs s >= 2");
        d1 = s - 1;
        d2 = 2 * s + 1;
    } else {
        if (s < 1) throw std::domain_error("cubic_truncation: lambda needs s >= 1");
        d1 = s;
        d2 = 2 * s + 2;
    }
    Rational v2 = v * v;
    Rational v3 = v2 * v;
    Rational k2 = v2 / 2 * (make_rational(-1, d1) - make_rational(1, d2));
    Rational k3 = v3 / 3 * (make_rational(1, d1 * d1) - make_rational(1, d2 * d2));
    return k2 + k3;
}

Rational gamma_closed_form(long s, const Rational& v) {
    if (s < 2) throw std::domain_error("gamma_closed_form: need s >= 2");
    Rational v2 = v * v;
    Rational v3 = v2 * v;
    Rational first = Rational(-3) * v2 * s / (Rational(2) * (s - 1) * (2 * s + 1));
    Rational second =
        v3 * s * (s + 2) / (Rational(s - 1) * (s - 1) * (2 * s + 1) * (2 * s + 1));
    return first + second;
}

Rational eq8_lower_bound(long s) {
    if (s < 1) throw std::domain_error("eq8_lower_bound: need s >= 1");
    Rational s2 = Rational(s) * s;
    Rational s3 = s2 * s;
    Rational s4 = s3 * s;
    return 1 + Rational(5) / (96 * s2) - Rational(1) / (80 * s3) + Rational(1) / (96 * s4);
}

Rational J1_bound(long s) {
    if (s < 1) throw std::domain_error("J1_bound: need s >= 1");
    return 1 + Rational(1) / (Rational(12) * (2 * s + 1) * (2 * s + 1));
}

Rational i_bound_numerator1(long s) {
    Rational rs(s);
    return 1 + 3 * rs * (-11 * rs * rs * rs + (rs + 4) * (rs + 4));
}

Rational i_bound_numerator2(long s) {
    Rational rs(s);
    Rational s6 = pow_rational(rs, 6);
    return s6 * (29 + 7 * rs - 15 * rs * rs / 2);
}

Rational I_bound(long s) {
    if (s < 2) throw std::domain_error("I_bound: need s >= 2");
    Rational den = pow_rational(Rational(s - 1), 4) * pow_rational(Rational(2 * s + 1), 6);
    return 1 + (i_bound_numerator1(s) + i_bound_numerator2(s)) / den;
}

Rational h2_bound_numerator(long s) {
    Rational rs(s);
    Rational s2 = rs * rs, s3 = s2 * rs, s4 = s3 * rs, s5 = s4 * rs;
    return -2 * s5 - 9 * (s4 + s3) + 8 * s2 + 22 * rs + 18;
}

Rational H2_bound(long s) {
    if (s < 2) throw std::domain_error("H2_bound: need s >= 2");
    Rational den = Rational(64) * s * pow_rational(Rational(s + 1), 6);
    return 1 + h2_bound_numerator(s) / den;
}

ProofStepRow proof_step_row(long s) {
    if (s < 1) throw std::domain_error("proof_step_row: need s >= 1");
    ProofStepRow row;
    row.s = s;
    row.ineq8_first_v = ineq8_first(s);
    row.eq8_lower = eq8_lower_bound(s);
    row.I = I_of(s);
    row.J1 = J_of(s, 1);
    row.J2 = J_of(s, 2);
    row.H1 = H_of(s, 1);
    row.H2 = H_of(s, 2);
    row.J1_bnd = J1_bound(s);
    if (s >= 2) {
        row.I_bnd = I_bound(s);
        row.H2_bnd = H2_bound(s);
    }

    row.eq8_first_ok = row.ineq8_first_v >= row.eq8_lower && row.eq8_lower > 1;
    row.I_lt_1 = row.I < 1;
    row.I_lt_bound = s < 3 || row.I < *row.I_bnd;
    row.J1_ge_1 = row.J1 >= 1;
    row.J2_ge_1 = row.J2 >= 1;
    row.J1_ge_bound = row.J1 >= row.J1_bnd;
    row.J1_le_J2 = row.J1 <= row.J2;
    row.H1_lt_1 = row.H1 < 1;
    row.H2_lt_1 = row.H2 < 1;
    row.H2_lt_bound = s < 2 || row.H2 < *row.H2_bnd;
    row.H1_le_H2 = row.H1 <= row.H2;
    return row;
}

std::vector<ProofStepRow> bound_scan(long s_max) {
    if (s_max < 1) throw std::domain_error("bound_scan: need s_max >= 1");
    std::vector<ProofStepRow> rows;
    rows.reserve(static_cast<std::size_t>(s_max));
    for (long s = 1; s <= s_max; ++s) rows.push_back(proof_step_row(s));
    return rows;
}

std::vector<SignCheck> truncation_sign_scan(long s_max,
                                            const std::vector<Rational>& v_grid) {
    if (s_max < 2) throw std::domain_error("truncation_sign_scan: need s_max >= 2");
    std::vector<SignCheck> out;
    for (long s = 2; s <= s_max; ++s) {
        for (const auto& v : v_grid) {
            if (v <= 0 || v > 1)
                throw std::domain_error("truncation_sign_scan: grid v must be in (0,1]");
            for (Truncation t : {Truncation::Gamma, Truncation::Lambda}) {
                SignCheck c;
                c.s = s;
                c.v = v;
                c.variant = t;
                c.value = cubic_truncation(s, v, t);
                c.negative = c.value < 0;
                out.push_back(std::move(c));
            }
        }
    }
    return out;
}

const char* to_string(ScalarKind k) {
    switch (k) {
        case ScalarKind::Eq5: return "eq5";
        case ScalarKind::Eq6: return "eq6";
        case ScalarKind::Eq7: return "eq7";
        case ScalarKind::RecipBound: return "recip_bound";
        case ScalarKind::ExpBound: return "exp_bound";
        case ScalarKind::Bernoulli: return "bernoulli";
        case ScalarKind::PowerMonotone: return "power_monotone";
        case ScalarKind::Ratio54: return "ratio_5_4";
        case ScalarKind::Ratio65: return "ratio_6_5";
        case ScalarKind::LogTailI: return "log_tail_I";
        case ScalarKind::LogTailH: return "log_tail_H";
    }
    return "?";
}

bool scalar_kind_uses_enclosure(ScalarKind k) {
    switch (k) {
        case ScalarKind::Eq5:
        case ScalarKind::Eq6:
        case ScalarKind::Eq7:
        case ScalarKind::ExpBound:
        case ScalarKind::LogTailI:
        case ScalarKind::LogTailH:
            return true;
        default:
            return false;
    }
}

std::vector<Rational> default_scalar_v_grid() {
    return {make_rational(1, 10), make_rational(1, 4),  make_rational(1, 2),
            make_rational(3, 4),  make_rational(9, 10), Rational(1)};
}

namespace {

using Result = ScalarCheckPoint::Result;

// decide "enclosure > r" / "enclosure < r"; lhs becomes the endpoint that
// witnesses the outcome
Result decide(const Enclosure& e, const Rational& r, bool want_greater,
              Rational& lhs_out) {
    Cmp c = compare_with_rational(e, r);
    if (c == Cmp::Undecided) {
        lhs_out = want_greater ? e.lo_rational() : e.hi_rational();
        return Result::Inconclusive;
    }
    bool greater = (c == Cmp::Greater);
    lhs_out = greater ? e.lo_rational() : e.hi_rational();
    return greater == want_greater ? Result::Pass : Result::Fail;
}

Enclosure scaled_log1p(long k, const Rational& x, Prec prec) {
    return enc_mul(Enclosure::point_ui(static_cast<unsigned long>(k), prec),
                   enc_log1p(x, prec));
}

}  // namespace

ScalarReport scalar_inequality_check(ScalarKind kind, long s_min, long s_max,
                                     const std::vector<Rational>& v_grid, Prec prec) {
    ScalarReport rep;
    rep.kind = kind;
    rep.precision = prec;

    auto push = [&](ScalarCheckPoint p) {
        if (p.result != Result::Pass) rep.all_pass = false;
        if (p.result == Result::Inconclusive) rep.any_inconclusive = true;
        rep.points.push_back(std::move(p));
    };
    auto exact_point = [&](std::optional<long> s, const Rational& v, const Rational& lhs,
                           const Rational& rhs, bool ok) {
        ScalarCheckPoint p;
        p.s = s;
        p.v = v;
        p.lhs = lhs;
        p.rhs = rhs;
        p.result = ok ? Result::Pass : Result::Fail;
        push(std::move(p));
    };
    auto enclosure_point = [&](std::optional<long> s, const Rational& v,
                               const Enclosure& e, const Rational& rhs,
                               bool want_greater) {
        ScalarCheckPoint p;
        p.s = s;
        p.v = v;
        p.rhs = rhs;
        p.result = decide(e, rhs, want_greater, p.lhs);
        push(std::move(p));
    };

    for (const auto& v : v_grid)
        if (v <= 0 || v > 1)
            throw std::domain_error("scalar_inequality_check: grid v must be in (0,1]");

    switch (kind) {
        case ScalarKind::RecipBound:  // c in (0,1), exact
            for (const auto& v : v_grid) {
                if (v >= 1) continue;
                Rational lhs = Rational(1) / (1 - v);
                Rational rhs = 1 + v + v * v;
                exact_point(std::nullopt, v, lhs, rhs, lhs > rhs);
            }
            break;
        case ScalarKind::ExpBound:  // c = -v < 0
            for (const auto& v : v_grid) {
                Rational c = -v;
                Rational rhs = 1 + c + c * c / 2;
                enclosure_point(std::nullopt, v, enc_exp(c, prec), rhs, false);
            }
            break;
        case ScalarKind::Eq5:  // c = v/s
            for (long s = std::max(s_min, 1L); s <= s_max; ++s)
                for (const auto& v : v_grid) {
                    Rational c = v / static_cast<unsigned long>(s);
                    Rational rhs = c / (1 + c);
                    enclosure_point(s, v, enc_log1p(c, prec), rhs, true);
                }
            break;
        case ScalarKind::Eq6:  // x = s
            for (long s = std::max(s_min, 1L); s <= s_max; ++s)
                for (const auto& v : v_grid) {
                    Rational x(s);
                    Rational c = v / (x + 1 - v);
                    Rational rhs =
                        (v * x / ((x + 1) * (x + 1))) / (1 - v / (x + 1));
                    enclosure_point(s, v, enc_log1p(c, prec), rhs, true);
                }
            break;
        case ScalarKind::Eq7:  // c = v/(s+1-v); log(1+c) > c - c^2/(v(c+1))
            for (long s = std::max(s_min, 1L); s <= s_max; ++s)
                for (const auto& v : v_grid) {
                    Rational c = v / (Rational(s) + 1 - v);
                    Rational rhs = c - c * c / (v * (c + 1));
                    enclosure_point(s, v, enc_log1p(c, prec), rhs, true);
                }
            break;
        case ScalarKind::Bernoulli:  // c = +/- v
            for (long s = std::max(s_min, 1L); s <= s_max; ++s)
                for (const auto& v : v_grid)
                    for (int sign : {+1, -1}) {
                        Rational c = sign > 0 ? v : Rational(-v);
                        if (c <= -1) continue;
                        Rational lhs =
                            pow_rational(1 + c, static_cast<unsigned long>(s));
                        Rational rhs = 1 + s * c;
                        exact_point(s, c, lhs, rhs, lhs >= rhs);
                    }
            break;
        case ScalarKind::PowerMonotone:
            for (long s = std::max(s_min, 1L); s <= s_max; ++s)
                for (const auto& v : v_grid) {
                    Rational lhs = pow_rational(1 + v / static_cast<unsigned long>(s),
                                                static_cast<unsigned long>(s));
                    Rational rhs =
                        pow_rational(1 + v / static_cast<unsigned long>(s + 1),
                                     static_cast<unsigned long>(s + 1));
                    exact_point(s, v, lhs, rhs, lhs <= rhs);
                }
            break;
        case ScalarKind::Ratio54:
            for (long s = std::max(s_min, 2L); s <= s_max; ++s)
                for (const auto& v : v_grid) {
                    if (v >= 1) continue;
                    Rational d(2 * s + 1);
                    Rational lhs = d / (d - v);
                    Rational rhs = 1 + v / d + 5 * v * v / (4 * d * d);
                    exact_point(s, v, lhs, rhs, lhs <= rhs);
                }
            break;
        case ScalarKind::Ratio65:
            for (long s = std::max(s_min, 2L); s <= s_max; ++s)
                for (const auto& v : v_grid) {
                    if (v >= 1) continue;
                    Rational d(2 * s + 2);
                    Rational lhs = d / (d - v);
                    Rational rhs = 1 + v / d + 6 * v * v / (5 * d * d);
                    exact_point(s, v, lhs, rhs, lhs < rhs);
                }
            break;
        case ScalarKind::LogTailI:
            for (long s = std::max(s_min, 2L); s <= s_max; ++s)
                for (const auto& v : v_grid) {
                    Enclosure e = enc_add(
                        scaled_log1p(2 * s + 1, -v / Rational(2 * s + 1), prec),
                        scaled_log1p(s - 1, v / Rational(s - 1), prec));
                    enclosure_point(s, v,
                                    e, cubic_truncation(s, v, Truncation::Gamma),
                                    false);
                }
            break;
        case ScalarKind::LogTailH:
            for (long s = std::max(s_min, 2L); s <= s_max; ++s)
                for (const auto& v : v_grid) {
                    Enclosure e = enc_add(
                        scaled_log1p(2 * s + 2, -v / Rational(2 * s + 2), prec),
                        scaled_log1p(s, v / Rational(s), prec));
                    enclosure_point(s, v,
                                    e, cubic_truncation(s, v, Truncation::Lambda),
                                    false);
                }
            break;
    }
    return rep;
}

}  // namespace chvatal

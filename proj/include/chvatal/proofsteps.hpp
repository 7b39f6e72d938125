#pragma once

#include <optional>
#include <vector>

#include "chvatal/enclosure.hpp"
#include "chvatal/rational.hpp"

namespace chvatal {

// Integrals of the n = 3s + r case split: all are products of two affine
// powers, so each value is an exact rational.

// First member of the r = 0 chain: integral over [0,1] of
// (1 - v/(2s))^(2s-1) (1 + v/s)^s.
Rational ineq8_first(long s);

// I_s = integral of (1 - v/(2s+1))^(2s) (1 + v/(s-1))^(s-1); the second
// factor is the constant 1 at s = 1 (zero exponent).
Rational I_of(long s);

// J_r = integral of (1 - v/(2s+1))^(2s) (1 + v/(s+r-1))^(s+r-1), r in {1,2}.
Rational J_of(long s, int r);

// H_r = integral of (1 - v/(2s+2))^(2s+1) (1 + v/(s+r-2))^(s+r-2), r in {1,2}.
Rational H_of(long s, int r);

enum class Truncation { Gamma, Lambda };

// Cubic (k = 2,3) truncation of the log-expansion exponent:
//   sum_{k=2..3} (v^k/k) ((-1)^(k-1)/d1^(k-1) - 1/d2^(k-1))
// with (d1,d2) = (s-1, 2s+1) for Gamma and (s, 2s+2) for Lambda.
Rational cubic_truncation(long s, const Rational& v, Truncation variant);

// The closed form -3v^2 s/(2(s-1)(2s+1)) + v^3 s(s+2)/((s-1)^2 (2s+1)^2);
// must agree exactly with the Gamma sum form.
Rational gamma_closed_form(long s, const Rational& v);

// Displayed closed-form bounds.
Rational eq8_lower_bound(long s);                  // s >= 1
Rational J1_bound(long s);                         // s >= 1
Rational I_bound(long s);                          // s >= 2
Rational H2_bound(long s);                         // s >= 2
Rational i_bound_numerator1(long s);               // negative for s >= 3
Rational i_bound_numerator2(long s);               // negative for s >= 3
Rational h2_bound_numerator(long s);               // negative for s >= 2

// One fully evaluated proof step; optional fields are outside their bound's
// validity range.
struct ProofStepRow {
    long s = 0;
    Rational ineq8_first_v, eq8_lower;
    Rational I, J1, J2, H1, H2;
    std::optional<Rational> I_bnd;   // s >= 2
    Rational J1_bnd;
    std::optional<Rational> H2_bnd;  // s >= 2

    bool eq8_first_ok = false;   // ineq8_first >= eq8_lower (> 1)
    bool I_lt_1 = false;
    bool I_lt_bound = true;      // s >= 3 only
    bool J1_ge_1 = false;
    bool J2_ge_1 = false;
    bool J1_ge_bound = false;
    bool J1_le_J2 = false;
    bool H1_lt_1 = false;
    bool H2_lt_1 = false;
    bool H2_lt_bound = true;     // s >= 2 only
    bool H1_le_H2 = false;

    bool all_ok() const {
        return eq8_first_ok && I_lt_1 && I_lt_bound && J1_ge_1 && J2_ge_1 &&
               J1_ge_bound && J1_le_J2 && H1_lt_1 && H2_lt_1 && H2_lt_bound &&
               H1_le_H2;
    }
};

ProofStepRow proof_step_row(long s);
std::vector<ProofStepRow> bound_scan(long s_max);  // s = 1..s_max

struct SignCheck {
    long s = 0;
    Rational v;
    Truncation variant = Truncation::Gamma;
    Rational value;
    bool negative = false;
};

// gamma and lambda truncations over s = 2..s_max and the grid.
std::vector<SignCheck> truncation_sign_scan(long s_max,
                                            const std::vector<Rational>& v_grid);

enum class ScalarKind {
    Eq5,            // log(1+c) > c/(1+c), c = v/s
    Eq6,            // log(1 + v/(x+1-v)) > (vx/(x+1)^2)/(1 - v/(x+1)), x = s
    Eq7,            // log(1+c) - c + c^2/(v(c+1)) > 0, c = v/(s+1-v)
    RecipBound,     // 1/(1-c) > 1 + c + c^2, c = v in (0,1)
    ExpBound,       // exp(c) < 1 + c + c^2/2, c = -v
    Bernoulli,      // (1+c)^s >= 1 + sc, c = +/-v
    PowerMonotone,  // (1+v/s)^s <= (1+v/(s+1))^(s+1)
    Ratio54,        // (2s+1)/(2s+1-v) <= 1 + v/(2s+1) + 5v^2/(4(2s+1)^2)
    Ratio65,        // (2s+2)/(2s+2-v) <  1 + v/(2s+2) + 6v^2/(5(2s+2)^2)
    LogTailI,       // full log exponent < gamma(s,v)
    LogTailH,       // full log exponent < lambda(s,v)
};

const char* to_string(ScalarKind k);
bool scalar_kind_uses_enclosure(ScalarKind k);

struct ScalarCheckPoint {
    std::optional<long> s;
    std::optional<Rational> v;
    enum class Result { Pass, Fail, Inconclusive } result = Result::Fail;
    // for enclosure-decided checks lhs is the witnessing interval endpoint,
    // so the rendered pair always satisfies (or refutes) the comparison
    Rational lhs, rhs;
    bool pass() const { return result == Result::Pass; }
};

struct ScalarReport {
    ScalarKind kind = ScalarKind::Eq5;
    Prec precision = 0;
    std::vector<ScalarCheckPoint> points;
    bool all_pass = true;
    bool any_inconclusive = false;
};

std::vector<Rational> default_scalar_v_grid();

// Grid verification of one side inequality; transcendental kinds are decided
// by enclosures and report Inconclusive (never Pass) when the interval does
// not separate the operands.
ScalarReport scalar_inequality_check(ScalarKind kind, long s_min, long s_max,
                                     const std::vector<Rational>& v_grid,
                                     Prec prec);

}  // namespace chvatal

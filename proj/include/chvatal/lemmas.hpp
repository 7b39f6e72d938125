#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chvatal/binom.hpp"
#include "chvatal/rational.hpp"

namespace chvatal {

// The four equivalent characterizations of q_m >= q_{m+1}:
//   direct  -- table lookup q_m vs q_{m+1}
//   main    -- integral of x^{m+1}(1-x)^{n-m-2} over [m/n,(m+1)/n] vs b_m
//   eq3     -- shifted-integrand form vs (n-m)/(n-m-1); undefined at m = 0
//   eq4     -- integral of (1-v/(m+1))^m (1+v/(n-m-1))^{n-m-1} vs 1
struct Lemma1Conditions {
    long n = 0;
    long m = 0;
    bool direct = false;
    Rational direct_lhs, direct_rhs;
    bool main = false;
    Rational main_lhs, main_rhs;
    std::optional<bool> eq3;
    Rational eq3_lhs, eq3_rhs;
    bool eq4 = false;
    Rational eq4_lhs, eq4_rhs;

    bool all_agree() const {
        return direct == main && main == eq4 && (!eq3 || *eq3 == eq4);
    }
};

struct Lemma2Scan {
    long n = 0;
    std::vector<std::pair<long, Rational>> h_values;  // (m, h(m)), m = 1..n-2
    bool strictly_decreasing = false;
    struct GCheck {
        Rational v;
        long m = 0;  // fails at the step m -> m+1
        bool pass = false;
    };
    std::vector<GCheck> g_checks;
    bool g_all_decreasing = false;
};

// b_m = (m/n)^{m+1} (1-m/n)^{n-m-1} / (n-m-1); needs m <= n-2.
Rational b_value(long n, long m);

Lemma1Conditions lemma1_conditions(long n, long m);
Lemma1Conditions lemma1_conditions(const TailTable& table, long m);

// g_v(m) = (1 - v/(m+1))^m (1 + v/(n-m-1))^{n-m-1}, exact for rational v.
Rational g_of(long n, long m, const Rational& v);

// h(m) = integral of g_v(m) over v in [0,1].
Rational h_of(long n, long m);

std::vector<Rational> default_v_grid();

Lemma2Scan lemma2_scan(long n, const std::vector<Rational>& v_grid = default_v_grid());

}  // namespace chvatal

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chvatal/rational.hpp"

namespace chvatal {

// Exact tail probabilities q_m = P(B(n, m/n) <= m) for m = 0..n.
struct TailTable {
    long n = 0;
    std::vector<Rational> q;
};

struct TheoremVerdict {
    long n = 0;
    long argmin_m = 0;
    bool unique_min = false;
    long target_m = 0;
    bool minimizer_matches = false;
    bool switch_iff_holds = false;
    // every consecutive comparison in the table was strict (observed, not
    // part of the theorem's statement)
    bool all_comparisons_strict = false;
    std::optional<long> first_violation_m;

    bool pass() const { return minimizer_matches && unique_min && switch_iff_holds; }
};

Int binom_coeff(long n, long k);

// Pascal row C(n, 0..n).
std::vector<Int> pascal_row(long n);

// S_m = sum_{k=0..m} C(n,k) m^k (n-m)^(n-k), so that q_m = S_m / n^n;
// computed with the running-term recurrence (all divisions exact).
// Needs 1 <= m <= n-1 and the Pascal row for n.
Int tail_numerator(long n, long m, const std::vector<Int>& row);

// Integer numerators S_m for m = 0..n (with S_0 = S_n = n^n).
std::vector<Int> q_numerators(long n);

Rational q_direct(long n, long m);

// q_m via the order-statistic density integral; valid for m <= n-1 only.
Rational q_integral(long n, long m);

TailTable q_table(long n);

// Nearest integer to 2n/3 (never a half-integer).
long target_m(long n);

// The switch predicate m + 1/2 < 2n/3 in integer form.
inline bool switch_predicate(long n, long m) { return 6 * m + 3 < 4 * n; }

TheoremVerdict theorem_check(long n);
TheoremVerdict theorem_check_from(long n, const std::vector<Int>& numerators);

struct McResult {
    double estimate = 0;
    double std_error = 0;
    std::uint64_t successes = 0;
    std::uint64_t samples = 0;
    // success count as an exact fraction of the sample count
    Rational estimate_exact;
    std::string generator = "mt19937_64";
};

// Monte Carlo check of q_m through the uniform order-statistic event:
// a trial succeeds when at most m of n uniforms fall at or below m/n.
McResult mc_estimate(long n, long m, std::uint64_t samples, std::uint64_t seed);

}  // namespace chvatal

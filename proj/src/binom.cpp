#include "chvatal/binom.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "chvatal/polyrat.hpp"

namespace chvatal {

Int binom_coeff(long n, long k) {
    if (n < 0 || k < 0 || k > n) throw std::domain_error("binom_coeff: need 0 <= k <= n");
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

std::vector<Int> pascal_row(long n) {
    if (n < 0) throw std::domain_error("pascal_row: negative n");
    std::vector<Int> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (long k = 0; k < n; ++k) {
        row[k + 1] = row[k] * static_cast<unsigned long>(n - k);
        mpz_divexact_ui(row[k + 1].get_mpz_t(), row[k + 1].get_mpz_t(),
                        static_cast<unsigned long>(k + 1));
    }
    return row;
}

Int tail_numerator(long n, long m, const std::vector<Int>& row) {
    if (m < 1 || m > n - 1) throw std::domain_error("tail_numerator: need 1 <= m <= n-1");
    const unsigned long um = static_cast<unsigned long>(m);
    const unsigned long uq = static_cast<unsigned long>(n - m);
    Int power;  // m^k (n-m)^(n-k)
    mpz_ui_pow_ui(power.get_mpz_t(), uq, static_cast<unsigned long>(n));
    Int sum = row[0] * power;
    for (long k = 1; k <= m; ++k) {
        power *= um;
        mpz_divexact_ui(power.get_mpz_t(), power.get_mpz_t(), uq);
        sum += row[k] * power;
    }
    return sum;
}

std::vector<Int> q_numerators(long n) {
    if (n < 1) throw std::domain_error("q_numerators: need n >= 1");
    auto row = pascal_row(n);
    Int nn;
    mpz_ui_pow_ui(nn.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(n));
    std::vector<Int> out(static_cast<std::size_t>(n) + 1);
    out[0] = nn;  // q_0 = 1
    out[n] = nn;  // q_n = 1 by convention
    for (long m = 1; m < n; ++m) out[m] = tail_numerator(n, m, row);
    return out;
}

Rational q_direct(long n, long m) {
    if (n < 1) throw std::domain_error("q_direct: need n >= 1");
    if (m < 0 || m > n) throw std::domain_error("q_direct: need 0 <= m <= n");
    if (m == 0 || m == n) return Rational(1);
    Int nn;
    mpz_ui_pow_ui(nn.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(n));
    return make_rational(tail_numerator(n, m, pascal_row(n)), nn);
}

Rational q_integral(long n, long m) {
    if (n < 1) throw std::domain_error("q_integral: need n >= 1");
    if (m < 0 || m > n - 1) throw std::domain_error("q_integral: need 0 <= m <= n-1");
    RatPoly integrand =
        poly_mul(affine_power(0, 1, static_cast<unsigned long>(m)),
                 affine_power(1, -1, static_cast<unsigned long>(n - m - 1)));
    Rational integral = poly_integrate(integrand, make_rational(m, n), Rational(1));
    return Rational(m + 1) * Rational(binom_coeff(n, m + 1)) * integral;
}

TailTable q_table(long n) {
    if (n < 2) throw std::domain_error("q_table: need n >= 2");
    auto nums = q_numerators(n);
    Int nn;
    mpz_ui_pow_ui(nn.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(n));
    TailTable t;
    t.n = n;
    t.q.reserve(nums.size());
    for (auto& s : nums) t.q.push_back(make_rational(s, nn));
    return t;
}

long target_m(long n) {
    if (n < 2) throw std::domain_error("target_m: need n >= 2");
    return (4 * n + 3) / 6;  // floor(2n/3 + 1/2)
}

TheoremVerdict theorem_check_from(long n, const std::vector<Int>& s) {
    TheoremVerdict v;
    v.n = n;
    v.target_m = target_m(n);

    long argmin = 0;
    bool unique = true;
    for (long m = 1; m <= n; ++m) {
        int c = cmp(s[m], s[argmin]);
        if (c < 0) {
            argmin = m;
            unique = true;
        } else if (c == 0) {
            unique = false;
        }
    }
    v.argmin_m = argmin;
    v.unique_min = unique;
    v.minimizer_matches = (argmin == v.target_m);

    v.switch_iff_holds = true;
    v.all_comparisons_strict = true;
    std::optional<long> first_switch_violation;
    for (long m = 0; m < n; ++m) {
        int c = cmp(s[m], s[m + 1]);
        if (c == 0) v.all_comparisons_strict = false;
        if ((c >= 0) != switch_predicate(n, m)) {
            v.switch_iff_holds = false;
            if (!first_switch_violation) first_switch_violation = m;
        }
    }

    if (!v.switch_iff_holds)
        v.first_violation_m = first_switch_violation;
    else if (!v.minimizer_matches || !v.unique_min)
        v.first_violation_m = argmin;
    return v;
}

TheoremVerdict theorem_check(long n) {
    if (n < 2) throw std::domain_error("theorem_check: need n >= 2");
    return theorem_check_from(n, q_numerators(n));
}

McResult mc_estimate(long n, long m, std::uint64_t samples, std::uint64_t seed) {
    if (n < 1) throw std::domain_error("mc_estimate: need n >= 1");
    if (m < 0 || m > n) throw std::domain_error("mc_estimate: need 0 <= m <= n");
    if (samples == 0) throw std::domain_error("mc_estimate: need samples >= 1");
    // single stream per call, seeded directly; the generator id is recorded
    // in the result so runs are reproducible
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double threshold = static_cast<double>(m) / static_cast<double>(n);
    std::uint64_t successes = 0;
    for (std::uint64_t t = 0; t < samples; ++t) {
        long count = 0;
        for (long i = 0; i < n; ++i)
            if (unif(gen) <= threshold) ++count;
        if (count <= m) ++successes;
    }
    McResult r;
    r.successes = successes;
    r.samples = samples;
    r.estimate = static_cast<double>(successes) / static_cast<double>(samples);
    r.std_error = std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(samples));
    r.estimate_exact = make_rational(Int(static_cast<unsigned long>(successes)),
                                     Int(static_cast<unsigned long>(samples)));
    return r;
}

}  // namespace chvatal

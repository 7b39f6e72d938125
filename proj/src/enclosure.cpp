#include "chvatal/enclosure.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace chvatal {

Dyadic::Dyadic(Prec prec) {
    if (prec < 2) throw std::invalid_argument("Dyadic: precision too small");
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Dyadic::Dyadic(const Dyadic& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);  // same precision, exact
}

Dyadic::Dyadic(Dyadic&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

Dyadic& Dyadic::operator=(const Dyadic& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Dyadic& Dyadic::operator=(Dyadic&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

Dyadic::~Dyadic() { mpfr_clear(v_); }

Rational Dyadic::to_rational() const {
    if (!mpfr_number_p(v_)) throw std::domain_error("Dyadic::to_rational: not finite");
    Rational out;
    mpfr_get_q(out.get_mpq_t(), v_);
    out.canonicalize();
    return out;
}

namespace {

Dyadic from_raw(mpfr_srcptr src) {
    Dyadic d(mpfr_get_prec(src));
    mpfr_set(d.raw(), src, MPFR_RNDN);
    return d;
}

}  // namespace

Enclosure::Enclosure(Dyadic lo, Dyadic hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (mpfr_cmp(lo_.raw(), hi_.raw()) > 0)
        throw std::invalid_argument("Enclosure: lo > hi");
}

Enclosure Enclosure::from_rational(const Rational& x, Prec prec) {
    Dyadic lo(prec), hi(prec);
    mpfr_set_q(lo.raw(), x.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi.raw(), x.get_mpq_t(), MPFR_RNDU);
    return Enclosure(std::move(lo), std::move(hi));
}

Enclosure Enclosure::point_ui(unsigned long x, Prec prec) {
    Dyadic lo(prec), hi(prec);
    mpfr_set_ui(lo.raw(), x, MPFR_RNDD);
    mpfr_set_ui(hi.raw(), x, MPFR_RNDU);
    return Enclosure(std::move(lo), std::move(hi));
}

bool Enclosure::contains(const Rational& x) const {
    return mpfr_cmp_q(lo_.raw(), x.get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi_.raw(), x.get_mpq_t()) >= 0;
}

Enclosure enc_add(const Enclosure& a, const Enclosure& b) {
    Prec p = std::max(a.precision(), b.precision());
    Dyadic lo(p), hi(p);
    mpfr_add(lo.raw(), a.lo().raw(), b.lo().raw(), MPFR_RNDD);
    mpfr_add(hi.raw(), a.hi().raw(), b.hi().raw(), MPFR_RNDU);
    return Enclosure(std::move(lo), std::move(hi));
}

Enclosure enc_sub(const Enclosure& a, const Enclosure& b) {
    Prec p = std::max(a.precision(), b.precision());
    Dyadic lo(p), hi(p);
    mpfr_sub(lo.raw(), a.lo().raw(), b.hi().raw(), MPFR_RNDD);
    mpfr_sub(hi.raw(), a.hi().raw(), b.lo().raw(), MPFR_RNDU);
    return Enclosure(std::move(lo), std::move(hi));
}

Enclosure enc_neg(const Enclosure& a) {
    Dyadic lo(a.precision()), hi(a.precision());
    mpfr_neg(lo.raw(), a.hi().raw(), MPFR_RNDD);
    mpfr_neg(hi.raw(), a.lo().raw(), MPFR_RNDU);
    return Enclosure(std::move(lo), std::move(hi));
}

namespace {

using BinOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

Enclosure four_corner(const Enclosure& a, const Enclosure& b, BinOp op) {
    Prec p = std::max(a.precision(), b.precision());
    Dyadic lo(p), hi(p), t(p);
    std::array<std::pair<mpfr_srcptr, mpfr_srcptr>, 4> corners = {
        {{a.lo().raw(), b.lo().raw()},
         {a.lo().raw(), b.hi().raw()},
         {a.hi().raw(), b.lo().raw()},
         {a.hi().raw(), b.hi().raw()}}};
    for (std::size_t i = 0; i < corners.size(); ++i) {
        op(t.raw(), corners[i].first, corners[i].second, MPFR_RNDD);
        if (i == 0 || mpfr_cmp(t.raw(), lo.raw()) < 0) mpfr_set(lo.raw(), t.raw(), MPFR_RNDN);
    }
    for (std::size_t i = 0; i < corners.size(); ++i) {
        op(t.raw(), corners[i].first, corners[i].second, MPFR_RNDU);
        if (i == 0 || mpfr_cmp(t.raw(), hi.raw()) > 0) mpfr_set(hi.raw(), t.raw(), MPFR_RNDN);
    }
    return Enclosure(std::move(lo), std::move(hi));
}

}  // namespace

Enclosure enc_mul(const Enclosure& a, const Enclosure& b) {
    return four_corner(a, b, mpfr_mul);
}

Enclosure enc_div(const Enclosure& a, const Enclosure& b) {
    if (!(mpfr_sgn(b.lo().raw()) > 0 || mpfr_sgn(b.hi().raw()) < 0))
        throw std::domain_error("enc_div: divisor interval contains zero");
    return four_corner(a, b, mpfr_div);
}

Enclosure enc_pow_int(const Enclosure& a, long e) {
    Prec p = a.precision();
    if (e == 0) return Enclosure::point_ui(1, p);
    if (e < 0) return enc_div(Enclosure::point_ui(1, p), enc_pow_int(a, -e));

    Dyadic lo(p), hi(p);
    if (e % 2 != 0 || mpfr_sgn(a.lo().raw()) >= 0) {
        mpfr_pow_si(lo.raw(), a.lo().raw(), e, MPFR_RNDD);
        mpfr_pow_si(hi.raw(), a.hi().raw(), e, MPFR_RNDU);
    } else if (mpfr_sgn(a.hi().raw()) <= 0) {
        mpfr_pow_si(lo.raw(), a.hi().raw(), e, MPFR_RNDD);
        mpfr_pow_si(hi.raw(), a.lo().raw(), e, MPFR_RNDU);
    } else {
        // even power of an interval spanning zero
        Dyadic t(p);
        mpfr_pow_si(t.raw(), a.lo().raw(), e, MPFR_RNDU);
        mpfr_pow_si(hi.raw(), a.hi().raw(), e, MPFR_RNDU);
        if (mpfr_cmp(t.raw(), hi.raw()) > 0) mpfr_set(hi.raw(), t.raw(), MPFR_RNDN);
        mpfr_set_zero(lo.raw(), 1);
    }
    return Enclosure(std::move(lo), std::move(hi));
}

Enclosure enc_log1p(const Rational& x, Prec prec) {
    if (x <= -1) throw std::domain_error("enc_log1p: need x > -1");
    Dyadic lo(prec), hi(prec), t(prec + 8);
    mpfr_set_q(t.raw(), x.get_mpq_t(), MPFR_RNDD);
    mpfr_log1p(lo.raw(), t.raw(), MPFR_RNDD);
    mpfr_set_q(t.raw(), x.get_mpq_t(), MPFR_RNDU);
    mpfr_log1p(hi.raw(), t.raw(), MPFR_RNDU);
    return Enclosure(std::move(lo), std::move(hi));
}

Enclosure enc_exp(const Rational& x, Prec prec) {
    Dyadic lo(prec), hi(prec), t(prec + 8);
    mpfr_set_q(t.raw(), x.get_mpq_t(), MPFR_RNDD);
    mpfr_exp(lo.raw(), t.raw(), MPFR_RNDD);
    mpfr_set_q(t.raw(), x.get_mpq_t(), MPFR_RNDU);
    mpfr_exp(hi.raw(), t.raw(), MPFR_RNDU);
    return Enclosure(std::move(lo), std::move(hi));
}

Cmp certified_compare(const Enclosure& a, const Enclosure& b) {
    if (mpfr_cmp(a.hi().raw(), b.lo().raw()) < 0) return Cmp::Less;
    if (mpfr_cmp(a.lo().raw(), b.hi().raw()) > 0) return Cmp::Greater;
    return Cmp::Undecided;
}

Cmp compare_with_rational(const Enclosure& a, const Rational& x) {
    if (mpfr_cmp_q(a.hi().raw(), x.get_mpq_t()) < 0) return Cmp::Less;
    if (mpfr_cmp_q(a.lo().raw(), x.get_mpq_t()) > 0) return Cmp::Greater;
    return Cmp::Undecided;
}

namespace {

// Seed term T_m = C(n,m) (m/n)^m ((n-m)/n)^(n-m), the modal binomial
// probability, as directed-rounded endpoints.
void seed_term(long n, long m, const Int& binom, mpfr_ptr out, mpfr_rnd_t rnd) {
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(out));
    mpfr_set_z(out, binom.get_mpz_t(), rnd);
    Rational p = make_rational(m, n);
    mpfr_set_q(t, p.get_mpq_t(), rnd);
    mpfr_pow_ui(t, t, static_cast<unsigned long>(m), rnd);
    mpfr_mul(out, out, t, rnd);
    Rational q = make_rational(n - m, n);
    mpfr_set_q(t, q.get_mpq_t(), rnd);
    mpfr_pow_ui(t, t, static_cast<unsigned long>(n - m), rnd);
    mpfr_mul(out, out, t, rnd);
    mpfr_clear(t);
}

}  // namespace

Enclosure certified_q(long n, long m, Prec prec) {
    if (n < 2) throw std::domain_error("certified_q: need n >= 2");
    if (m < 0 || m > n) throw std::domain_error("certified_q: need 0 <= m <= n");
    if (prec < 8) throw std::invalid_argument("certified_q: need precision >= 8");
    if (m == 0 || m == n) return Enclosure::point_ui(1, prec);

    Int binom = binom_coeff(n, m);
    Dyadic tlo(prec), thi(prec), sumlo(prec), sumhi(prec), tmp(prec);
    seed_term(n, m, binom, tlo.raw(), MPFR_RNDD);
    seed_term(n, m, binom, thi.raw(), MPFR_RNDU);
    mpfr_set(sumlo.raw(), tlo.raw(), MPFR_RNDD);
    mpfr_set(sumhi.raw(), thi.raw(), MPFR_RNDU);

    for (long k = m; k >= 1; --k) {
        // step k -> k-1 multiplies the term by r = k(n-m) / ((n-k+1)m) < 1,
        // and r only shrinks as k decreases
        const unsigned long num = static_cast<unsigned long>(k) *
                                  static_cast<unsigned long>(n - m);
        const unsigned long den = static_cast<unsigned long>(n - k + 1) *
                                  static_cast<unsigned long>(m);
        if (mpfr_sgn(thi.raw()) > 0 && mpfr_get_exp(thi.raw()) < -(prec + 32)) {
            // remaining terms sum to at most T_k * r/(1-r)
            mpfr_mul_ui(tmp.raw(), thi.raw(), num, MPFR_RNDU);
            mpfr_div_ui(tmp.raw(), tmp.raw(), den - num, MPFR_RNDU);
            mpfr_add(sumhi.raw(), sumhi.raw(), tmp.raw(), MPFR_RNDU);
            break;
        }
        mpfr_mul_ui(tlo.raw(), tlo.raw(), num, MPFR_RNDD);
        mpfr_div_ui(tlo.raw(), tlo.raw(), den, MPFR_RNDD);
        mpfr_mul_ui(thi.raw(), thi.raw(), num, MPFR_RNDU);
        mpfr_div_ui(thi.raw(), thi.raw(), den, MPFR_RNDU);
        mpfr_add(sumlo.raw(), sumlo.raw(), tlo.raw(), MPFR_RNDD);
        mpfr_add(sumhi.raw(), sumhi.raw(), thi.raw(), MPFR_RNDU);
    }
    return Enclosure(std::move(sumlo), std::move(sumhi));
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

inline double down(double x) { return std::nextafter(x, -kInf); }
inline double up(double x) { return std::nextafter(x, kInf); }

struct DInterval {
    double lo = 0, hi = 0;
};

// 53-bit table of q_m enclosures, same algorithm as certified_q but with
// native doubles and one-ulp outward widening per operation.
std::vector<DInterval> table53(long n, const std::vector<Int>& row) {
    std::vector<DInterval> q(static_cast<std::size_t>(n) + 1);
    q[0] = {1.0, 1.0};
    q[n] = {1.0, 1.0};
    const double cutoff = std::ldexp(1.0, -90);
    mpfr_t s;
    mpfr_init2(s, 53);
    for (long m = 1; m < n; ++m) {
        seed_term(n, m, row[m], s, MPFR_RNDD);
        double tlo = mpfr_get_d(s, MPFR_RNDD);
        seed_term(n, m, row[m], s, MPFR_RNDU);
        double thi = mpfr_get_d(s, MPFR_RNDU);
        double slo = tlo, shi = thi;
        for (long k = m; k >= 1; --k) {
            const double num = static_cast<double>(k) * static_cast<double>(n - m);
            const double den = static_cast<double>(n - k + 1) * static_cast<double>(m);
            if (thi < cutoff) {
                shi = up(shi + up(up(thi * num) / (den - num)));
                break;
            }
            tlo = down(down(tlo * num) / den);
            thi = up(up(thi * num) / den);
            slo = down(slo + tlo);
            shi = up(shi + thi);
        }
        q[m] = {slo, shi};
    }
    mpfr_clear(s);
    return q;
}

Enclosure to_enclosure(const DInterval& d) {
    Dyadic lo(53), hi(53);
    mpfr_set_d(lo.raw(), d.lo, MPFR_RNDD);
    mpfr_set_d(hi.raw(), d.hi, MPFR_RNDU);
    return Enclosure(std::move(lo), std::move(hi));
}

}  // namespace

CertifiedVerdict certified_theorem_check(long n, Prec prec) {
    if (n < 2) throw std::domain_error("certified_theorem_check: need n >= 2");
    if (prec < 8) throw std::invalid_argument("certified_theorem_check: need precision >= 8");

    std::vector<Int> row;  // Pascal row, shared by the 53-bit path and fallbacks
    std::vector<Enclosure> q;
    q.reserve(static_cast<std::size_t>(n) + 1);
    if (prec == 53) {
        row = pascal_row(n);
        for (const auto& d : table53(n, row)) q.push_back(to_enclosure(d));
    } else {
        for (long m = 0; m <= n; ++m) q.push_back(certified_q(n, m, prec));
    }

    CertifiedVerdict out;
    std::map<long, Enclosure> refined;      // entries recomputed at 2x precision
    std::map<long, Int> exact_numerators;   // entries computed exactly

    auto refined_q = [&](long m) -> const Enclosure& {
        auto it = refined.find(m);
        if (it == refined.end())
            it = refined.emplace(m, certified_q(n, m, 2 * prec)).first;
        return it->second;
    };
    auto exact_num = [&](long m) -> const Int& {
        auto it = exact_numerators.find(m);
        if (it == exact_numerators.end()) {
            if (row.empty()) row = pascal_row(n);
            Int s;
            if (m == 0 || m == n)
                mpz_ui_pow_ui(s.get_mpz_t(), static_cast<unsigned long>(n),
                              static_cast<unsigned long>(n));
            else
                s = tail_numerator(n, m, row);
            it = exact_numerators.emplace(m, std::move(s)).first;
        }
        return it->second;
    };
    // -1 / 0 / +1 comparison of q_a vs q_b
    auto resolve = [&](long a, long b) -> int {
        ++out.comparisons;
        Cmp c = certified_compare(q[a], q[b]);
        if (c == Cmp::Undecided) c = certified_compare(refined_q(a), refined_q(b));
        if (c == Cmp::Less) return -1;
        if (c == Cmp::Greater) return 1;
        ++out.fallbacks;
        return cmp(exact_num(a), exact_num(b));
    };

    TheoremVerdict v;
    v.n = n;
    v.target_m = target_m(n);
    long argmin = 0;
    bool unique = true;
    for (long m = 1; m <= n; ++m) {
        int c = resolve(m, argmin);
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
        int c = resolve(m, m + 1);
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

    out.verdict = v;
    return out;
}

}  // namespace chvatal

#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>

#include "chvatal/binom.hpp"
#include "chvatal/rational.hpp"

namespace chvatal {

using Prec = mpfr_prec_t;

// Value-semantic wrapper around one mpfr number (a dyadic rational:
// integer mantissa times a power of two).
class Dyadic {
  public:
    explicit Dyadic(Prec prec);
    Dyadic(const Dyadic& o);
    Dyadic(Dyadic&& o) noexcept;
    Dyadic& operator=(const Dyadic& o);
    Dyadic& operator=(Dyadic&& o) noexcept;
    ~Dyadic();

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    Prec precision() const { return mpfr_get_prec(v_); }

    Rational to_rational() const;  // exact
    double to_double(mpfr_rnd_t rnd) const { return mpfr_get_d(v_, rnd); }

  private:
    mpfr_t v_;
};

// Certified interval [lo, hi]: the represented real value is guaranteed to
// lie inside. All arithmetic rounds endpoints outward.
class Enclosure {
  public:
    Enclosure(Dyadic lo, Dyadic hi);

    static Enclosure from_rational(const Rational& x, Prec prec);
    static Enclosure point_ui(unsigned long x, Prec prec);

    const Dyadic& lo() const { return lo_; }
    const Dyadic& hi() const { return hi_; }
    Prec precision() const { return lo_.precision(); }

    Rational lo_rational() const { return lo_.to_rational(); }
    Rational hi_rational() const { return hi_.to_rational(); }
    Rational width() const { return hi_rational() - lo_rational(); }
    bool contains(const Rational& x) const;
    bool is_point() const { return mpfr_equal_p(lo_.raw(), hi_.raw()); }

  private:
    Dyadic lo_, hi_;
};

Enclosure enc_add(const Enclosure& a, const Enclosure& b);
Enclosure enc_sub(const Enclosure& a, const Enclosure& b);
Enclosure enc_mul(const Enclosure& a, const Enclosure& b);
// b must exclude zero
Enclosure enc_div(const Enclosure& a, const Enclosure& b);
Enclosure enc_neg(const Enclosure& a);
Enclosure enc_pow_int(const Enclosure& a, long e);

// Rigorous log(1+x) for rational x > -1.
Enclosure enc_log1p(const Rational& x, Prec prec);
// Rigorous exp(x) for rational x.
Enclosure enc_exp(const Rational& x, Prec prec);

enum class Cmp { Less, Greater, Undecided };

// Decides only when the intervals are disjoint.
Cmp certified_compare(const Enclosure& a, const Enclosure& b);
Cmp compare_with_rational(const Enclosure& a, const Rational& x);

// Enclosure of q_m = P(B(n, m/n) <= m), summing the binomial terms from the
// modal index downward in outward-rounded arithmetic, with a certified
// geometric bound on the discarded tail.
Enclosure certified_q(long n, long m, Prec prec);

struct CertifiedVerdict {
    TheoremVerdict verdict;
    std::uint64_t comparisons = 0;
    std::uint64_t fallbacks = 0;  // comparisons settled by exact rationals
    double fallback_fraction() const {
        return comparisons ? static_cast<double>(fallbacks) / static_cast<double>(comparisons)
                           : 0.0;
    }
};

// Same verdict semantics as theorem_check; undecided comparisons retry at
// doubled precision once, then fall back to exact integer arithmetic.
CertifiedVerdict certified_theorem_check(long n, Prec prec);

}  // namespace chvatal

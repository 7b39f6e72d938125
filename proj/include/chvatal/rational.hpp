#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace chvatal {

using Int = mpz_class;

// Exact rational in canonical form: positive denominator, gcd(|num|, den) = 1.
// mpq_class keeps results canonical as long as every input is canonical, so
// construction is the only place that needs an explicit canonicalize().
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_canonical(const Rational& r);

// x^p for a nonnegative integer exponent; 0^0 = 1.
Rational pow_rational(const Rational& x, unsigned long p);

// Renders "p/q", or just "p" when q = 1.
std::string to_string(const Rational& r);

// Parses "p/q" or "p".
Rational rational_from_string(const std::string& s);

// Fixed-point decimal rendering, rounded to nearest (ties away from zero).
std::string decimal_string(const Rational& r, int decimals);

}  // namespace chvatal

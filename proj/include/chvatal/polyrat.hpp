#pragma once

#include <vector>

#include "chvatal/rational.hpp"

namespace chvatal {

// Dense univariate polynomial with exact rational coefficients.
// The empty coefficient list is the zero polynomial; otherwise the trailing
// coefficient is nonzero.
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);

    static RatPoly constant(Rational c);

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(std::size_t k) const;

    bool operator==(const RatPoly&) const = default;

  private:
    std::vector<Rational> coeffs_;
};

// Expansion of (c0 + c1*v)^p via the binomial theorem; p = 0 gives the
// constant 1 regardless of c0, c1.
RatPoly affine_power(const Rational& c0, const Rational& c1, unsigned long p);

RatPoly poly_add(const RatPoly& a, const RatPoly& b);
RatPoly poly_mul(const RatPoly& a, const RatPoly& b);

Rational poly_eval(const RatPoly& p, const Rational& x);

// Exact definite integral of p from a to b (power-rule antiderivative).
Rational poly_integrate(const RatPoly& p, const Rational& a, const Rational& b);

}  // namespace chvatal

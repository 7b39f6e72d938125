#include "chvatal/polyrat.hpp"

#include <stdexcept>

namespace chvatal {

namespace {

void trim(std::vector<Rational>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

const Rational kZero{};

}  // namespace

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim(coeffs_);
}

RatPoly RatPoly::constant(Rational c) {
    std::vector<Rational> v;
    if (c != 0) v.push_back(std::move(c));
    return RatPoly(std::move(v));
}

const Rational& RatPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

RatPoly affine_power(const Rational& c0, const Rational& c1, unsigned long p) {
    if (p == 0) return RatPoly::constant(1);
    if (c1 == 0) return RatPoly::constant(pow_rational(c0, p));

    std::vector<Rational> coeffs(p + 1);
    // running binomial coefficient C(p,k) and running powers of c0, c1;
    // c0^(p-k) is taken from a precomputed descending table
    std::vector<Rational> c0pow(p + 1);
    c0pow[0] = 1;
    for (unsigned long j = 1; j <= p; ++j) c0pow[j] = c0pow[j - 1] * c0;
    Int binom = 1;
    Rational c1pow = 1;
    for (unsigned long k = 0; k <= p; ++k) {
        coeffs[k] = Rational(binom) * c0pow[p - k] * c1pow;
        if (k < p) {
            binom *= static_cast<unsigned long>(p - k);
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), k + 1);
            c1pow *= c1;
        }
    }
    return RatPoly(std::move(coeffs));
}

RatPoly poly_add(const RatPoly& a, const RatPoly& b) {
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    std::vector<Rational> out(std::max(ca.size(), cb.size()));
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (k < ca.size()) out[k] += ca[k];
        if (k < cb.size()) out[k] += cb[k];
    }
    return RatPoly(std::move(out));
}

namespace {

// Clears denominators: returns integer numerators A_k with a_k = A_k / d.
Int clear_denominators(const std::vector<Rational>& c, std::vector<Int>& nums) {
    Int d = 1;
    for (const auto& x : c) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
    nums.resize(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        Int f;
        mpz_divexact(f.get_mpz_t(), d.get_mpz_t(), c[k].get_den().get_mpz_t());
        nums[k] = c[k].get_num() * f;
    }
    return d;
}

}  // namespace

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    // integer convolution over a common denominator, one canonicalization
    // per output coefficient
    std::vector<Int> na, nb;
    Int da = clear_denominators(a.coeffs(), na);
    Int db = clear_denominators(b.coeffs(), nb);
    std::vector<Int> conv(na.size() + nb.size() - 1);
    for (std::size_t i = 0; i < na.size(); ++i)
        for (std::size_t j = 0; j < nb.size(); ++j) conv[i + j] += na[i] * nb[j];
    Int d = da * db;
    std::vector<Rational> out(conv.size());
    for (std::size_t k = 0; k < conv.size(); ++k) out[k] = make_rational(conv[k], d);
    return RatPoly(std::move(out));
}

Rational poly_eval(const RatPoly& p, const Rational& x) {
    Rational acc;
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
}

Rational poly_integrate(const RatPoly& p, const Rational& a, const Rational& b) {
    const auto& c = p.coeffs();
    if (c.empty()) return Rational();
    if (a == 0 && b == 1) {
        // sum of c_k / (k+1) over one common denominator
        Int den = 1;
        for (std::size_t k = 0; k < c.size(); ++k) {
            Int dk = c[k].get_den() * static_cast<unsigned long>(k + 1);
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), dk.get_mpz_t());
        }
        Int num = 0;
        for (std::size_t k = 0; k < c.size(); ++k) {
            Int dk = c[k].get_den() * static_cast<unsigned long>(k + 1);
            Int f;
            mpz_divexact(f.get_mpz_t(), den.get_mpz_t(), dk.get_mpz_t());
            num += c[k].get_num() * f;
        }
        return make_rational(num, den);
    }
    std::vector<Rational> anti(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k)
        anti[k + 1] = c[k] / static_cast<unsigned long>(k + 1);
    RatPoly F(std::move(anti));
    return poly_eval(F, b) - poly_eval(F, a);
}

}  // namespace chvatal

#include "chvatal/rational.hpp"

#include <cstdlib>

namespace chvatal {

bool is_canonical(const Rational& r) {
    if (r.get_den() <= 0) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return g == 1;
}

Rational pow_rational(const Rational& x, unsigned long p) {
    Rational out;
    mpz_pow_ui(out.get_num().get_mpz_t(), x.get_num().get_mpz_t(), p);
    mpz_pow_ui(out.get_den().get_mpz_t(), x.get_den().get_mpz_t(), p);
    // num/den stay coprime under powering, no canonicalization needed
    return out;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("rational_from_string: cannot parse '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("rational_from_string: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string decimal_string(const Rational& r, int decimals) {
    if (decimals < 0) throw std::invalid_argument("decimal_string: negative precision");
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(decimals));
    // round(num * 10^d / den), ties away from zero
    Int num = r.get_num() * scale;
    const Int& den = r.get_den();
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Int rem2 = abs(rem) * 2;
    if (rem2 >= den) q += (sgn(num) < 0 ? -1 : 1);

    bool neg = q < 0;
    Int aq = abs(q);
    Int ipart = aq / scale;
    Int fpart = aq % scale;
    std::string out = neg ? "-" : "";
    out += ipart.get_str();
    if (decimals > 0) {
        std::string f = fpart.get_str();
        out += "." + std::string(static_cast<size_t>(decimals) - f.size(), '0') + f;
    }
    return out;
}

}  // namespace chvatal

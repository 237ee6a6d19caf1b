#ifndef LREC_RATIONAL_HPP
#define LREC_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lrec {

/// Exact reduced fraction. mpq_class keeps values canonical (gcd(|num|,den)=1,
/// den >= 1) as long as they are built through the helpers below.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("parse_rational: bad rational '" + text + "'");
    if (r.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
    r.canonicalize();
    return r;
}

/// Always renders with an explicit denominator: "p/q" (so "2" -> "2/1").
inline std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Plain rendering: "p" when q == 1, else "p/q".
inline std::string to_string(const Rational& r) {
    return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

inline bool is_reduced(const Rational& r) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return r.get_den() > 0 && g == 1;
}

inline Rational pow_int(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;  // powers of a canonical fraction stay canonical
}

}  // namespace lrec

#endif

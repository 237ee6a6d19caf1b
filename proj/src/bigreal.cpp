#include "lrec/bigreal.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace lrec {

namespace {

long join_prec(const BigReal& a, const BigReal& b) {
    return std::max(a.prec(), b.prec());
}

}  // namespace

std::string BigReal::str(int sig_digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
    if (mpfr_zero_p(v_)) return "0";
    const size_t digits =
        sig_digits > 0 ? static_cast<size_t>(sig_digits)
                       : static_cast<size_t>(static_cast<double>(prec()) * 0.30103) + 2;
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    std::string sign_part;
    if (!mant.empty() && mant[0] == '-') {
        sign_part = "-";
        mant.erase(0, 1);
    }
    // strip trailing zeros but keep one digit
    while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
    std::string out = sign_part + mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(e - 1);
    return out;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r(join_prec(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    r.set_err(a.err() + b.err() + r.ulp());
    return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r(join_prec(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    r.set_err(a.err() + b.err() + r.ulp());
    return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r(join_prec(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    r.set_err(a.abs_double() * b.err() + b.abs_double() * a.err() + a.err() * b.err() +
              r.ulp());
    return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
    BigReal r(join_prec(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    const double babs = b.abs_double();
    if (babs > b.err() && babs > 0) {
        r.set_err((a.err() + r.abs_double() * b.err()) / (babs - b.err()) + r.ulp());
    } else {
        r.set_err(std::numeric_limits<double>::infinity());
    }
    return r;
}

BigReal operator-(const BigReal& a) {
    BigReal r = a;
    mpfr_neg(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

BigReal abs(const BigReal& a) {
    BigReal r = a;
    mpfr_abs(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

BigReal log(const BigReal& a) {
    if (a.sign() <= 0) throw std::domain_error("log of non-positive value");
    BigReal r(a.prec());
    mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
    const double aabs = a.abs_double();
    r.set_err((aabs > a.err() ? a.err() / (aabs - a.err()) : std::numeric_limits<double>::infinity()) +
              r.ulp());
    return r;
}

BigReal exp(const BigReal& a) {
    BigReal r(a.prec());
    mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
    r.set_err(r.abs_double() * a.err() * 1.01 + r.ulp());
    return r;
}

BigReal sqr(const BigReal& a) {
    BigReal r(a.prec());
    mpfr_sqr(r.raw(), a.raw(), MPFR_RNDN);
    r.set_err(2 * a.abs_double() * a.err() + a.err() * a.err() + r.ulp());
    return r;
}

BigReal pow(const Rational& base, const BigReal& expo) {
    if (base <= 0) throw std::domain_error("pow: base must be positive");
    BigReal b = BigReal::of(base, expo.prec());
    BigReal r(expo.prec());
    mpfr_pow(r.raw(), b.raw(), expo.raw(), MPFR_RNDN);
    // d/ds base^s = ln(base) * base^s; base itself carries <= 1 ulp.
    BigReal lb = log(b);
    const double babs = b.abs_double();
    const double rel = std::fabs(lb.to_double()) * expo.err() +
                       (babs > 0 ? std::fabs(expo.to_double()) * b.err() / babs : 0.0);
    r.set_err(r.abs_double() * rel + r.ulp() * 2);
    return r;
}

BigReal pow_si(const BigReal& base, long e) {
    BigReal r(base.prec());
    mpfr_pow_si(r.raw(), base.raw(), e, MPFR_RNDN);
    const double rel = base.abs_double() > 0 ? base.err() / base.abs_double() : 0.0;
    r.set_err(r.abs_double() * rel * static_cast<double>(e < 0 ? -e : e) * 1.01 + r.ulp());
    return r;
}

BigReal const_pi(const PrecisionContext& ctx) {
    BigReal r(ctx.bits + ctx.guard_bits);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    r.set_err(r.ulp());
    return r;
}

}  // namespace lrec

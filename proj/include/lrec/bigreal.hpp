#ifndef LREC_BIGREAL_HPP
#define LREC_BIGREAL_HPP

#include <mpfr.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "lrec/rational.hpp"

namespace lrec {

/// Working mantissa precision for numeric evaluation. Immutable value passed
/// explicitly; no global rounding state.
struct PrecisionContext {
    long bits = 256;
    long guard_bits = 16;
};

struct PrecisionInsufficient : std::runtime_error {
    PrecisionInsufficient() : std::runtime_error("PrecisionInsufficient") {}
};

/// Arbitrary-precision real with a conservative absolute error bound attached.
/// Arithmetic takes the larger precision of its operands and adds one ulp of
/// the result to the propagated bound.
class BigReal {
  public:
    explicit BigReal(long prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigReal(const BigReal& o) : err_(o.err_) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept : err_(o.err_) {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    BigReal& operator=(BigReal o) noexcept {
        mpfr_swap(v_, o.v_);
        std::swap(err_, o.err_);
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    static BigReal of(long x, long prec) {
        BigReal r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;  // exact
    }
    static BigReal of(double x, long prec) {
        BigReal r(prec);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;  // the double is taken as exact input
    }
    static BigReal of(const Rational& x, long prec) {
        BigReal r(prec);
        mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
        r.err_ = r.ulp();
        return r;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    long prec() const { return mpfr_get_prec(v_); }

    double err() const { return err_; }
    void set_err(double e) { err_ = e; }
    void widen_err(double e) { err_ += e; }

    /// One unit in the last place of the current value (absolute).
    double ulp() const {
        if (mpfr_zero_p(v_)) return 0.0;
        const long e = mpfr_get_exp(v_) - prec();
        return e < -1070 ? 5e-324 : std::ldexp(1.0, static_cast<int>(e > 1020 ? 1020 : e));
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    double abs_double() const { return std::fabs(to_double()); }

    int cmp(const BigReal& o) const { return mpfr_cmp(v_, o.v_); }
    int cmp(long x) const { return mpfr_cmp_si(v_, x); }
    int cmp(const Rational& x) const { return mpfr_cmp_q(v_, x.get_mpq_t()); }
    bool operator<(const BigReal& o) const { return cmp(o) < 0; }
    bool operator>(const BigReal& o) const { return cmp(o) > 0; }

    /// Decimal rendering; sig_digits == 0 means full precision.
    std::string str(int sig_digits = 0) const;

  private:
    mpfr_t v_;
    double err_ = 0.0;
};

BigReal operator+(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a, const BigReal& b);
BigReal operator*(const BigReal& a, const BigReal& b);
BigReal operator/(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a);

BigReal abs(const BigReal& a);
BigReal log(const BigReal& a);   // throws std::domain_error at a <= 0
BigReal exp(const BigReal& a);
BigReal sqr(const BigReal& a);

/// base^expo for rational base > 0 and an arbitrary real exponent.
BigReal pow(const Rational& base, const BigReal& expo);
BigReal pow_si(const BigReal& base, long e);

BigReal const_pi(const PrecisionContext& ctx);

}  // namespace lrec

#endif

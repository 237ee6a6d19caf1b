#include "lrec/functions.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include "lrec/number_theory.hpp"

namespace lrec {

namespace {

long work_prec(const PrecisionContext& ctx) { return ctx.bits + ctx.guard_bits; }

double eps_at(const PrecisionContext& ctx, double scale) {
    return std::fabs(scale) * std::ldexp(1.0, static_cast<int>(-(ctx.bits + ctx.guard_bits)));
}

void require_right_of_pole(const BigReal& s, const char* who) {
    if (s.cmp(1) <= 0) throw OutOfDomain(std::string(who) + " needs s > 1");
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

/// Alternating sum_{k>=0} (-1)^k a(k) for totally monotone a, by Chebyshev
/// convergence acceleration; truncation error ~ (3+sqrt(8))^{-n}.
BigReal accelerated_alternating(const std::function<BigReal(long)>& a, double a0_scale,
                                const PrecisionContext& ctx) {
    const long wp = work_prec(ctx) + 16;
    const long n = static_cast<long>(static_cast<double>(wp) / 2.54) + 8;

    BigReal t(wp);
    mpfr_sqrt_ui(t.raw(), 8, MPFR_RNDN);
    mpfr_add_ui(t.raw(), t.raw(), 3, MPFR_RNDN);
    BigReal d = pow_si(t, n);
    d = (d + BigReal::of(1L, wp) / d) / BigReal::of(2L, wp);

    BigReal b = BigReal::of(-1L, wp);
    BigReal c = -d;
    BigReal acc = BigReal::of(0L, wp);
    for (long k = 0; k < n; ++k) {
        c = b - c;
        acc = acc + c * a(k);
        // b <- b * (k+n)(k-n) / ((k+1/2)(k+1)), kept exact as a rational factor
        Rational f(2 * (k + n) * (k - n), (2 * k + 1) * (k + 1));
        b = b * BigReal::of(f, wp);
    }
    BigReal r = acc / d;
    r.widen_err(4.0 * a0_scale * std::exp(-1.7627 * static_cast<double>(n)) +
                r.ulp() * 8);
    return r;
}

}  // namespace

BigReal euler_gamma(const PrecisionContext& ctx) {
    BigReal r(work_prec(ctx));
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    r.set_err(r.ulp());
    return r;
}

BigReal zeta_real(const BigReal& s, const PrecisionContext& ctx) {
    if (s.sign() <= 0) throw OutOfDomain("zeta needs s > 0");
    if (s.cmp(1) == 0) throw PoleAt1();
    const long wp = work_prec(ctx);
    BigReal r(wp);
    mpfr_zeta(r.raw(), s.raw(), MPFR_RNDN);
    // |zeta'(s)| <= 1/(s-1)^2 + 4 on s > 0 away from 0.
    BigReal gap(wp);
    mpfr_sub_ui(gap.raw(), s.raw(), 1, MPFR_RNDN);
    const double ds = std::fabs(mpfr_get_d(gap.raw(), MPFR_RNDN));
    const double deriv = (ds > 0 ? 1.0 / (ds * ds) : 0.0) + 4.0;
    r.set_err(deriv * s.err() + 4 * r.ulp());
    return r;
}

BigReal eta_real(const BigReal& s, const PrecisionContext& ctx) {
    if (s.sign() <= 0) throw OutOfDomain("eta needs s > 0");
    BigReal ms = -s;
    BigReal r = accelerated_alternating(
        [&](long k) { return pow(rational(k + 1), ms); }, 1.0, ctx);
    // |eta'(s)| < 1 for s > 0.
    r.widen_err(s.err());
    return r;
}

BigReal beta_real(const BigReal& s, const PrecisionContext& ctx) {
    if (s.sign() <= 0) throw OutOfDomain("beta needs s > 0");
    BigReal ms = -s;
    BigReal r = accelerated_alternating(
        [&](long k) { return pow(rational(2 * k + 1), ms); }, 1.0, ctx);
    r.widen_err(s.err());
    return r;
}

BigReal dirichlet_lambda_real(const BigReal& s, const PrecisionContext& ctx) {
    if (s.sign() <= 0) throw OutOfDomain("lambda needs s > 0");
    if (s.cmp(1) == 0) throw PoleAt1();
    const long wp = work_prec(ctx);
    BigReal one = BigReal::of(1L, wp);
    return (one - pow(rational(2), -s)) * zeta_real(s, ctx);
}

BigReal hurwitz_zeta_real(const BigReal& s, const Rational& q, const PrecisionContext& ctx) {
    if (q <= 0) throw OutOfDomain("hurwitz zeta needs q > 0");
    require_right_of_pole(s, "hurwitz zeta");
    const long wp = work_prec(ctx) + 32;
    const double sd = s.to_double();
    const unsigned M = static_cast<unsigned>(ctx.bits / 6 + 8);
    const long N = static_cast<long>(1.1 * (std::fabs(sd) + 2.0 * M)) + 16;

    BigReal ms = -s;
    BigReal acc = BigReal::of(0L, wp);
    for (long j = 0; j < N; ++j) acc = acc + pow(q + j, ms);

    const Rational x = q + N;
    BigReal one = BigReal::of(1L, wp);
    acc = acc + pow(x, one - s) / (s - one);
    acc = acc + pow(x, ms) / BigReal::of(2L, wp);

    // Euler-Maclaurin corrections sum_k B_{2k}/(2k)! (s)_{2k-1} x^{-s-2k+1}.
    const auto bern = bernoulli_numbers(2 * M);
    BigReal poch = s;  // (s)(s+1)...(s+2k-2), updated per k
    double last = 0.0;
    for (unsigned k = 1; k <= M; ++k) {
        const Rational rk = bern[2 * k] / factorial(2 * k);
        BigReal expo = ms - BigReal::of(static_cast<long>(2 * k - 1), wp);
        BigReal term = BigReal::of(rk, wp) * poch * pow(x, expo);
        acc = acc + term;
        last = term.abs_double();
        if (k < M)
            poch = poch * (s + BigReal::of(static_cast<long>(2 * k - 1), wp)) *
                   (s + BigReal::of(static_cast<long>(2 * k), wp));
    }
    const double qd = mpq_get_d(q.get_mpq_t());
    const double deriv = (std::fabs(std::log(qd)) + 2.0) * (acc.abs_double() + 1.0) + 2.0;
    acc.widen_err(2.0 * last + deriv * s.err());
    return acc;
}

BigReal hurwitz_lambda_real(const BigReal& s, const Rational& q, const PrecisionContext& ctx) {
    return pow(rational(2), -s) * hurwitz_zeta_real(s, q / 2, ctx);
}

BigReal l_char_real(const CharacterTable& chi, const BigReal& s, const PrecisionContext& ctx) {
    require_right_of_pole(s, "L(s, chi)");
    const long wp = work_prec(ctx);
    BigReal acc = BigReal::of(0L, wp);
    for (unsigned r = 1; r < chi.modulus; ++r) {
        if (chi.values[r] == 0) continue;
        BigReal hz = hurwitz_zeta_real(s, Rational(r, chi.modulus), ctx);
        acc = chi.values[r] > 0 ? acc + hz : acc - hz;
    }
    return pow(Rational(1, chi.modulus), s) * acc;
}

namespace {

/// Shared direct-sum driver for integer-indexed series with |coeff| <= 1:
/// sums coeff(n) n^{-s} for n >= start until the integral tail bound drops
/// below the working epsilon; the bound is added to err.
BigReal direct_dirichlet_sum(const std::function<int(std::uint64_t)>& coeff,
                             std::uint64_t start, const BigReal& s,
                             const PrecisionContext& ctx) {
    const long wp = work_prec(ctx);
    const double sd = s.to_double();
    BigReal ms = -s;
    BigReal acc = BigReal::of(0L, wp);
    const double lead = std::pow(static_cast<double>(start), -sd);
    const double eps = eps_at(ctx, lead);
    double tail = lead;
    std::uint64_t n = start;
    for (; n < 300000 && tail > eps; ++n) {
        const int c = coeff(n);
        if (c == 0) continue;
        BigReal t = pow(rational(static_cast<long>(n)), ms);
        if (c == 1)
            acc = acc + t;
        else if (c == -1)
            acc = acc - t;
        else
            acc = acc + BigReal::of(static_cast<long>(c), wp) * t;
        const double nd = static_cast<double>(n);
        tail = std::pow(nd, 1.0 - sd) / (sd - 1.0) + std::pow(nd, -sd);
    }
    acc.widen_err(tail + 2.0 * lead * s.err());
    return acc;
}

}  // namespace

BigReal prime_zeta_real(const BigReal& s, const PrecisionContext& ctx) {
    require_right_of_pole(s, "prime zeta");
    return direct_dirichlet_sum([](std::uint64_t n) { return is_prime(n) ? 1 : 0; }, 2, s,
                                ctx);
}

BigReal thue_morse_series_real(ThueMorseVariant variant, const BigReal& s,
                               const PrecisionContext& ctx) {
    require_right_of_pole(s, "Thue-Morse series");
    if (variant == ThueMorseVariant::upsilon)
        return direct_dirichlet_sum([](std::uint64_t n) { return thue_morse_sign(n); }, 1, s,
                                    ctx);
    // xi: explicit 2^{-s} head, signed tail from rank 3 on.
    BigReal head = pow(rational(2), -s);
    return head + direct_dirichlet_sum([](std::uint64_t n) { return thue_morse_sign(n); }, 3,
                                       s, ctx);
}

LogGamma lngamma_real(const BigReal& x, const PrecisionContext& ctx) {
    if (mpfr_integer_p(x.raw()) && x.sign() <= 0) throw PoleAtNonPositiveInteger();
    const long wp = work_prec(ctx);
    LogGamma out{BigReal(wp), 1};
    int sign = 0;
    mpfr_lgamma(out.log_abs.raw(), &sign, x.raw(), MPFR_RNDN);
    out.sign = sign;
    BigReal psi(wp);
    mpfr_digamma(psi.raw(), x.raw(), MPFR_RNDN);
    out.log_abs.set_err(psi.abs_double() * x.err() + 4 * out.log_abs.ulp());
    return out;
}

BigReal gamma_real(const BigReal& x, const PrecisionContext& ctx) {
    if (mpfr_integer_p(x.raw()) && x.sign() <= 0) throw PoleAtNonPositiveInteger();
    const long wp = work_prec(ctx);
    BigReal r(wp);
    mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
    BigReal psi(wp);
    mpfr_digamma(psi.raw(), x.raw(), MPFR_RNDN);
    r.set_err(r.abs_double() * psi.abs_double() * x.err() + 4 * r.ulp());
    return r;
}

PoleSeries lngamma_pole_series(unsigned n, unsigned K) {
    if (K < 1) throw UnsupportedParameter("pole series needs K >= 1");
    PoleSeries ps;
    ps.n = n;
    for (unsigned k = 1; k <= K; ++k) {
        const int sk = ((n + 1) * k) % 2 == 0 ? 1 : -1;   // (-1)^{(n+1)k}
        const int hk = (n * k) % 2 == 0 ? 1 : -1;          // (-1)^{nk}
        PoleSeriesTerm t;
        t.k = k;
        t.zeta_multiple = Rational(sk, static_cast<long>(k));
        t.constant = Rational(hk) * harmonic_number(n, k) / static_cast<long>(k);
        ps.terms.push_back(std::move(t));
    }
    return ps;
}

BigReal pole_series_partial_sum(const PoleSeries& ps, const Rational& x,
                                const PrecisionContext& ctx) {
    if (x <= 0) throw OutOfDomain("pole series offset must be positive");
    const long wp = work_prec(ctx);
    BigReal acc = -log(BigReal::of(x, wp)) - log(BigReal::of(factorial(ps.n), wp));
    for (const auto& t : ps.terms) {
        BigReal zk = t.k == 1 ? euler_gamma(ctx)
                              : zeta_real(BigReal::of(static_cast<long>(t.k), wp), ctx);
        BigReal coeff = BigReal::of(t.zeta_multiple, wp) * zk + BigReal::of(t.constant, wp);
        acc = acc + coeff * BigReal::of(pow_int(x, t.k), wp);
    }
    return acc;
}

BigReal series_eval(const SeriesSpec& spec, const BigReal& s, const PrecisionContext& ctx) {
    const long wp = work_prec(ctx);
    const double sd = s.to_double();
    auto stream = spec.open();
    auto first = stream();
    if (!first) throw EmptySeries();
    if (first->base <= 1 || sd <= 1.0)
        throw OutOfDomain("series_eval needs b1 > 1 and s > 1");

    BigReal ms = -s;
    const double b1d = mpq_get_d(first->base.get_mpq_t());
    const double lead = std::fabs(mpq_get_d(first->coeff.get_mpq_t())) * std::pow(b1d, -sd);
    const double eps = eps_at(ctx, lead);

    BigReal acc = BigReal::of(0L, wp);
    double tail = lead;
    std::size_t count = 0;
    for (auto t = first; t; t = stream()) {
        acc = acc + BigReal::of(t->coeff, wp) * pow(t->base, ms);
        const double bd = mpq_get_d(t->base.get_mpq_t());
        // Bases repeat at most once per unit interval and |coeff| <= 1 for
        // every cataloged stream, so the integral bound covers the tail.
        tail = std::pow(bd, 1.0 - sd) / (sd - 1.0) + std::pow(bd, -sd);
        if (tail <= eps || ++count > 200000) break;
    }
    acc.widen_err(tail + 2.0 * lead * s.err());
    return acc;
}

BigReal expansion_eval(const Expansion& e, const BigReal& s, const PrecisionContext& ctx) {
    const long wp = work_prec(ctx);
    BigReal acc = BigReal::of(0L, wp);
    for (const auto& t : e.terms) acc = acc + BigReal::of(t.coeff, wp) * pow(t.base, s);
    return acc;
}

}  // namespace lrec

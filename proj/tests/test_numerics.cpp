#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrec/catalog.hpp"
#include "lrec/expansion_core.hpp"
#include "lrec/functions.hpp"
#include "lrec/number_theory.hpp"
#include "lrec/validate.hpp"

using namespace lrec;

namespace {

PrecisionContext ctx;  // 256-bit default
const long wp = ctx.bits + ctx.guard_bits;

BigReal at(double s) { return BigReal::of(s, wp); }

bool close(const BigReal& a, const BigReal& b) {
    return abs(a - b).to_double() <= a.err() + b.err() + 1e-60;
}

}  // namespace

TEST_CASE("classical special values") {
    BigReal pi = const_pi(ctx);
    CHECK(close(zeta_real(at(2.0), ctx), sqr(pi) / at(6.0)));
    CHECK(close(eta_real(at(1.0), ctx), log(at(2.0))));
    CHECK(close(beta_real(at(1.0), ctx), pi / at(4.0)));
    // gamma to 50 published decimal digits
    BigReal gamma = euler_gamma(ctx);
    BigReal ref = BigReal::of(
        parse_rational("57721566490153286060651209008240243104215933593992") /
            pow_int(Rational(10), 50),
        wp);
    CHECK(abs(gamma - ref).to_double() < 1e-49);
}

TEST_CASE("eta and lambda factor through zeta") {
    for (double sd : {1.5, 2.0, 3.0, 10.0, 40.0}) {
        CAPTURE(sd);
        BigReal s = at(sd);
        BigReal z = zeta_real(s, ctx);
        BigReal one = at(1.0);
        CHECK(close(eta_real(s, ctx), (one - pow(Rational(2), one - s)) * z));
        CHECK(close(dirichlet_lambda_real(s, ctx), (one - pow(Rational(2), -s)) * z));
    }
}

TEST_CASE("hurwitz zeta specializes and shifts correctly") {
    for (double sd : {2.0, 3.0, 10.0}) {
        BigReal s = at(sd);
        CHECK(close(hurwitz_zeta_real(s, Rational(1), ctx), zeta_real(s, ctx)));
        // zeta(s, 1/2) = (2^s - 1) zeta(s) ... as 2^s zeta - 2^s zeta(s,1) relation:
        CHECK(close(hurwitz_zeta_real(s, Rational(1, 2), ctx),
                    (pow(Rational(2), s) - at(1.0)) * zeta_real(s, ctx)));
        CHECK(close(hurwitz_lambda_real(s, Rational(3), ctx),
                    pow(Rational(2), -s) * hurwitz_zeta_real(s, Rational(3, 2), ctx)));
    }
}

TEST_CASE("prime zeta agrees with the Moebius-log-zeta resummation") {
    // P(s) = sum_k mu(k)/k * ln zeta(k s); at s = 2 the tail shrinks like 4^-k.
    BigReal s = at(2.0);
    BigReal acc = BigReal::of(0L, wp);
    for (long k = 1; k <= 40; ++k) {
        int mu = mobius(static_cast<std::uint64_t>(k));
        if (mu == 0) continue;
        acc = acc + BigReal::of(Rational(mu, k), wp) * log(zeta_real(at(2.0 * k), ctx));
    }
    BigReal direct = prime_zeta_real(s, ctx);
    // the direct sum's truncation tail is folded into its error bound
    CHECK(direct.err() < 1e-5);
    CHECK(abs(direct - acc).to_double() <= direct.err() + acc.err() + 1e-20);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(zeta_real(at(1.0), ctx), PoleAt1);
    CHECK_THROWS_AS(zeta_real(at(-0.5), ctx), OutOfDomain);
    CHECK_THROWS_AS(dirichlet_lambda_real(at(1.0), ctx), PoleAt1);
    CHECK_THROWS_AS(hurwitz_zeta_real(at(0.5), Rational(3, 2), ctx), OutOfDomain);
    CHECK_THROWS_AS(prime_zeta_real(at(0.9), ctx), OutOfDomain);
    CHECK_THROWS_AS(lngamma_real(at(0.0), ctx), PoleAtNonPositiveInteger);
    CHECK_THROWS_AS(lngamma_real(at(-3.0), ctx), PoleAtNonPositiveInteger);
    CHECK_THROWS_AS(gamma_real(at(-2.0), ctx), PoleAtNonPositiveInteger);
}

TEST_CASE("log-gamma magnitude and sign between the poles") {
    // Gamma(1/2) = sqrt(pi); Gamma(-1/2) = -2 sqrt(pi); Gamma(-3/2) = 4 sqrt(pi)/3.
    BigReal ln_sqrt_pi = log(const_pi(ctx)) / at(2.0);
    LogGamma g_half = lngamma_real(at(0.5), ctx);
    CHECK(g_half.sign == 1);
    CHECK(close(g_half.log_abs, ln_sqrt_pi));
    LogGamma g_mhalf = lngamma_real(at(-0.5), ctx);
    CHECK(g_mhalf.sign == -1);
    CHECK(close(g_mhalf.log_abs, ln_sqrt_pi + log(at(2.0))));
    LogGamma g_m3half = lngamma_real(at(-1.5), ctx);
    CHECK(g_m3half.sign == 1);
    CHECK(close(g_m3half.log_abs, ln_sqrt_pi + log(BigReal::of(Rational(4, 3), wp))));
    CHECK(close(gamma_real(at(5.0), ctx), at(24.0)));
}

TEST_CASE("pole-series coefficients are the predicted exact rationals") {
    PoleSeries ps = lngamma_pole_series(3, 12);
    CHECK(ps.n == 3);
    REQUIRE(ps.terms.size() == 12);
    // k = 1: (-1)^{n+1}(Z(1) - H_n) with Z(1) = gamma.
    CHECK(ps.terms[0].k == 1);
    CHECK(ps.terms[0].zeta_multiple == 1);
    CHECK(ps.terms[0].constant == Rational(-11, 6));
    // k = 2: (Z(2) + H_3^{(2)})/2 = zeta(2)/2 + 49/72.
    CHECK(ps.terms[1].zeta_multiple == Rational(1, 2));
    CHECK(ps.terms[1].constant == Rational(49, 72));

    PoleSeries ps0 = lngamma_pole_series(0, 3);
    CHECK(ps0.terms[0].zeta_multiple == -1);  // ln Gamma(x): -gamma x + ...
    CHECK(ps0.terms[0].constant == 0);
    CHECK(ps0.terms[1].zeta_multiple == Rational(1, 2));
}

TEST_CASE("pole-series partial sums track log-gamma near each pole") {
    const Rational x(1, 100);
    for (unsigned n : {0u, 1u, 2u, 5u}) {
        CAPTURE(n);
        PoleSeries ps = lngamma_pole_series(n, 12);
        const Rational arg = Rational(-static_cast<long>(n)) + (n % 2 == 0 ? x : -x);
        BigReal direct = lngamma_real(BigReal::of(arg, wp), ctx).log_abs;
        BigReal approx = pole_series_partial_sum(ps, x, ctx);
        CHECK(abs(direct - approx).to_double() <= 1e-24);
    }
}

TEST_CASE("series_eval matches closed forms and bounds its tail") {
    BigReal s = at(10.0);
    BigReal direct = series_eval(make_series(parse_series_id("zeta_minus_1")), s, ctx);
    BigReal via = zeta_real(s, ctx) - at(1.0);
    CHECK(close(direct, via));
    CHECK(direct.err() < 1e-40);
}

TEST_CASE("expansion_eval sums rational powers exactly") {
    Expansion e;
    e.terms = {{Rational(1), Rational(2)}, {Rational(-1), Rational(1, 2)}};
    BigReal v = expansion_eval(e, at(2.0), ctx);
    CHECK(abs(v - BigReal::of(Rational(15, 4), wp)).to_double() < 1e-70);
}

TEST_CASE("validate_expansion accepts a faithful expansion and reports fields") {
    SeriesSpec spec = make_series(parse_series_id("zeta_minus_1"));
    Expansion e = reciprocal_expansion(spec, Rational(2, 5));
    ValidationReport r = validate_expansion(spec, e, at(40.0), ctx);
    CHECK(r.pass);
    CHECK(r.threshold == Rational(2, 5));
    CHECK(r.first_omitted < r.threshold);
    CHECK(!(r.residual > r.bound));
}

TEST_CASE("error bounds stay honest against a finer recomputation") {
    PrecisionContext finer{ctx.bits + 64, ctx.guard_bits};
    auto honest = [&](auto&& f) {
        BigReal coarse = f(ctx);
        BigReal fine = f(finer);
        return abs(coarse - fine).to_double() <= coarse.err() + 1e-300;
    };
    for (double sd : {1.5, 2.0, 7.0, 40.0}) {
        CAPTURE(sd);
        CHECK(honest([&](const PrecisionContext& c) {
            return zeta_real(BigReal::of(sd, c.bits + c.guard_bits), c);
        }));
        CHECK(honest([&](const PrecisionContext& c) {
            return eta_real(BigReal::of(sd, c.bits + c.guard_bits), c);
        }));
    }
    CHECK(honest([&](const PrecisionContext& c) {
        return hurwitz_zeta_real(BigReal::of(3.0, c.bits + c.guard_bits), Rational(3, 2), c);
    }));
    CHECK(honest([&](const PrecisionContext& c) {
        return lngamma_real(BigReal::of(-1.5, c.bits + c.guard_bits), c).log_abs;
    }));
    CHECK(honest([&](const PrecisionContext& c) { return euler_gamma(c); }));
}

TEST_CASE("thue-morse series obey the split-by-parity recursion check") {
    // Direct evaluation against an independently computed partial sum plus
    // rigorous integral tail bound at s = 4.
    BigReal s = at(4.0);
    BigReal direct = thue_morse_series_real(ThueMorseVariant::upsilon, s, ctx);
    BigReal acc = BigReal::of(0L, wp);
    const long N = 20000;  // partial-sum gap bounded by N^{-3}/3 ~ 4e-14
    for (long n = 1; n <= N; ++n)
        acc = acc + BigReal::of(Rational(thue_morse_sign(n)), wp) * pow(Rational(n), -s);
    CHECK(abs(direct - acc).to_double() < 1e-12);
}

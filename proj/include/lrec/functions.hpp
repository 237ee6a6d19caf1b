#ifndef LREC_FUNCTIONS_HPP
#define LREC_FUNCTIONS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "lrec/bigreal.hpp"
#include "lrec/catalog.hpp"
#include "lrec/expansion.hpp"
#include "lrec/rational.hpp"

namespace lrec {

struct PoleAt1 : std::runtime_error {
    PoleAt1() : std::runtime_error("PoleAt1") {}
};
struct OutOfDomain : std::runtime_error {
    explicit OutOfDomain(const std::string& what) : std::runtime_error("OutOfDomain: " + what) {}
};
struct PoleAtNonPositiveInteger : std::runtime_error {
    PoleAtNonPositiveInteger() : std::runtime_error("PoleAtNonPositiveInteger") {}
};

/// Euler-Mascheroni constant with certified bound; the oracle every
/// gamma-targeted probe is compared against.
BigReal euler_gamma(const PrecisionContext& ctx);

/// Riemann zeta for real s > 0, s != 1 (both sides of the pole).
/// Throws PoleAt1 at s = 1 and OutOfDomain for s <= 0.
BigReal zeta_real(const BigReal& s, const PrecisionContext& ctx);

/// Alternating zeta, s > 0, by alternating-series convergence acceleration.
BigReal eta_real(const BigReal& s, const PrecisionContext& ctx);

/// Alternating odd-index series sum (-1)^k (2k+1)^{-s}, s > 0, accelerated.
BigReal beta_real(const BigReal& s, const PrecisionContext& ctx);

/// Odd-index zeta sum (2n+1)^{-s} = (1 - 2^{-s}) zeta(s); s > 0, s != 1.
BigReal dirichlet_lambda_real(const BigReal& s, const PrecisionContext& ctx);

/// L(s, chi) for a real character, s > 1, through Hurwitz zeta per residue.
BigReal l_char_real(const CharacterTable& chi, const BigReal& s, const PrecisionContext& ctx);

/// Hurwitz zeta(s, q) = sum_{n>=0} (q+n)^{-s} for s > 1, q > 0, by
/// Euler-Maclaurin with exact Bernoulli-number corrections.
BigReal hurwitz_zeta_real(const BigReal& s, const Rational& q, const PrecisionContext& ctx);

/// Odd-step Hurwitz analogue sum (q+2n)^{-s} = 2^{-s} zeta(s, q/2), s > 1.
BigReal hurwitz_lambda_real(const BigReal& s, const Rational& q, const PrecisionContext& ctx);

/// Prime zeta sum over primes p^{-s}, s > 1, direct sum with tail bound.
BigReal prime_zeta_real(const BigReal& s, const PrecisionContext& ctx);

enum class ThueMorseVariant {
    upsilon,  // sum of tm(n) n^{-s} over all n >= 1 with Thue-Morse signs
    xi,       // 2^{-s} plus the Thue-Morse signed tail over n >= 3
};
BigReal thue_morse_series_real(ThueMorseVariant variant, const BigReal& s,
                               const PrecisionContext& ctx);

/// ln|Gamma(x)| with the sign of Gamma(x) reported separately, so negative
/// non-integer arguments (between poles) are supported.
struct LogGamma {
    BigReal log_abs;
    int sign = 1;
};
LogGamma lngamma_real(const BigReal& x, const PrecisionContext& ctx);

/// Gamma(x) itself, x not a non-positive integer.
BigReal gamma_real(const BigReal& x, const PrecisionContext& ctx);

/// Structured expansion of ln|Gamma(-n + (-1)^n x)| around the pole at -n:
///   -ln x - ln(n!) + sum_{k=1..K} (zeta_multiple_k * Z(k) + constant_k) x^k
/// where Z(1) = gamma and Z(k) = zeta(k) for k >= 2. Both parts are exact
/// rationals: zeta_multiple_k = (-1)^{(n+1)k}/k and
/// constant_k = (-1)^{nk} H_n^{(k)} / k. The k = 1 coefficient therefore
/// equals (-1)^{n+1} (gamma - H_n).
struct PoleSeriesTerm {
    unsigned k = 0;
    Rational zeta_multiple;
    Rational constant;
};
struct PoleSeries {
    unsigned n = 0;
    std::vector<PoleSeriesTerm> terms;
};
PoleSeries lngamma_pole_series(unsigned n, unsigned K);

/// Numeric value of the K-term partial sum at exact offset x > 0 (the
/// truncation error is deliberately not folded into err; callers compare
/// partial sums).
BigReal pole_series_partial_sum(const PoleSeries& ps, const Rational& x,
                                const PrecisionContext& ctx);

/// F(s) for a generalized Dirichlet series by direct summation of its stream,
/// s > 1 beyond the leading base; the tail bound is added to err. This is the
/// reference evaluation used to validate reciprocal expansions.
BigReal series_eval(const SeriesSpec& spec, const BigReal& s, const PrecisionContext& ctx);

/// Evaluates a truncated expansion sum c * base^s at s.
BigReal expansion_eval(const Expansion& e, const BigReal& s, const PrecisionContext& ctx);

}  // namespace lrec

#endif

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "lrec/catalog.hpp"
#include "lrec/expansion_core.hpp"
#include "lrec/number_theory.hpp"
#include "lrec/sign_laws.hpp"

using namespace lrec;

TEST_CASE("number-theoretic helpers") {
    CHECK(big_omega(1) == 0);
    CHECK(big_omega(12) == 3);
    CHECK(liouville(1) == 1);
    CHECK(liouville(2) == -1);
    CHECK(liouville(4) == 1);
    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    // t(2n) = t(n), t(2n+1) flips t(n); ranks are 1-indexed here.
    for (std::uint64_t n = 1; n < 300; ++n) {
        CHECK(thue_morse_sign(2 * n) == -thue_morse_sign(2 * n - 1));
    }
    CHECK(thue_morse_sign(1) == 1);
    CHECK(thue_morse_sign(2) == -1);
    CHECK(thue_morse_sign(3) == -1);
    CHECK(thue_morse_sign(4) == 1);
    CHECK(harmonic_number(3) == Rational(11, 6));
    CHECK(harmonic_number(3, 2) == Rational(49, 36));
    CHECK(harmonic_number(0, 5) == 0);
    auto bern = bernoulli_numbers(8);
    CHECK(bern[1] == Rational(-1, 2));
    CHECK(bern[2] == Rational(1, 6));
    CHECK(bern[8] == Rational(-1, 30));
}

TEST_CASE("first-kind law: the numerator-1 clause outranks the gap clauses") {
    // p=1, q=2 has Omega gap 1, which alone would predict lambda(2) = -1;
    // the p=1 clause forces +1 instead.
    CHECK(lambda_V(1, 2) == Prediction::plus);
    CHECK(lambda_V(1, 1) == Prediction::minus);  // equal Omega, -lambda(1)
    CHECK(lambda_V(2, 1) == Prediction::plus);   // gap 1, lambda(1) = +1
    CHECK(lambda_V(4, 9) == Prediction::minus);  // equal Omega, -lambda(9)
    CHECK(lambda_V(8, 1) == Prediction::unclassified);
}

TEST_CASE("second-kind law depends only on the Omega gap") {
    CHECK(lambda_A(1, 2) == Prediction::plus);
    CHECK(lambda_A(2, 3) == Prediction::minus);
    CHECK(lambda_A(4, 3) == Prediction::plus);
    CHECK(lambda_A(8, 3) == Prediction::unclassified);
}

TEST_CASE("laws reject unreduced fractions") {
    CHECK_THROWS_AS(lambda_V(2, 4), NotReduced);
    CHECK_THROWS_AS(lambda_A(6, 9), NotReduced);
}

TEST_CASE("exhaustive case split against an independent Omega") {
    for (std::uint64_t p = 1; p <= 60; ++p)
        for (std::uint64_t q = 1; q <= 60; ++q) {
            if (std::gcd(p, q) != 1) continue;
            CAPTURE(p);
            CAPTURE(q);
            const int gap = static_cast<int>(big_omega(p)) - static_cast<int>(big_omega(q));
            const int lq = liouville(q);
            Prediction ev = p == 1 && q != 1 ? Prediction::plus
                            : gap == 1 || gap == -1
                                ? (lq > 0 ? Prediction::plus : Prediction::minus)
                            : gap == 0 ? (lq > 0 ? Prediction::minus : Prediction::plus)
                                       : Prediction::unclassified;
            Prediction ea = gap == 1 || gap == -1 ? Prediction::plus
                            : gap == 0            ? Prediction::minus
                                                  : Prediction::unclassified;
            CHECK(lambda_V(p, q) == ev);
            CHECK(lambda_A(p, q) == ea);
        }
}

TEST_CASE("audits of the computed expansions") {
    Expansion z = reciprocal_expansion(make_series(parse_series_id("zeta_minus_1")),
                                       Rational(1, 5));
    AuditReport rv = audit_signs(z, SignLaw::V);
    CHECK(rv.law == "V");
    CHECK(rv.matched >= 21);
    CHECK(rv.mismatched == 0);
    CHECK(rv.verdicts.size() == z.terms.size());
    CHECK(rv.matched + rv.mismatched + rv.unclassified == rv.verdicts.size());

    Expansion eta = reciprocal_expansion(make_series(parse_series_id("one_minus_eta")),
                                         Rational(1, 5));
    AuditReport ra = audit_signs(eta, SignLaw::A);
    CHECK(ra.mismatched == 0);
    CHECK(ra.matched > 0);
}

TEST_CASE("residue sign report groups by denominator residue") {
    Expansion z = reciprocal_expansion(make_series(parse_series_id("zeta_minus_1")),
                                       Rational(1, 5));
    AuditReport r = residue_sign_report(z, 4);
    CHECK(r.law == "residue");
    CHECK(r.verdicts.size() == z.terms.size());
    CHECK(r.matched + r.mismatched == r.verdicts.size() - r.unclassified);
}

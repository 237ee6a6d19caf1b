#include "lrec/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "lrec/catalog.hpp"
#include "lrec/expansion_core.hpp"
#include "lrec/fixtures.hpp"
#include "lrec/functions.hpp"
#include "lrec/number_theory.hpp"
#include "lrec/probes.hpp"
#include "lrec/sign_laws.hpp"
#include "lrec/validate.hpp"

namespace lrec {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

CriterionResult run_one(int index, const std::string& title,
                        const std::function<Outcome()>& fn) {
    CriterionResult r;
    r.index = index;
    r.title = title;
    const auto t0 = Clock::now();
    try {
        Outcome o = fn();
        r.pass = o.pass;
        r.detail = o.detail;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

// At threshold 2/5 the omitted tail is dominated by its first term for every
// cataloged series, so the residual fits under 2 * (first omitted base)^s.
Rational validation_threshold(const Rational&) { return Rational(2, 5); }

long validation_s(const Rational& b1) { return b1 >= 3 ? 60 : 40; }

Rational leading_base(const SeriesSpec& spec) {
    auto stream = spec.open();
    auto first = stream();
    if (!first) throw EmptySeries();
    return first->base;
}

// --- criterion bodies ------------------------------------------------------

Outcome zeta_table() {
    const Fixture& f = fixture_for("zeta_minus_1");
    SeriesSpec spec = make_series(parse_series_id("zeta_minus_1"));
    Expansion e = reciprocal_expansion(spec, Rational(8, 45));
    const bool same = e.terms == f.terms.terms;
    std::ostringstream d;
    d << e.terms.size() << " terms at threshold 8/45, "
      << (same ? "all exact" : "MISMATCH vs transcription");
    return {same, d.str()};
}

Outcome catalog_tables() {
    bool all = true;
    std::ostringstream d;
    for (const auto& f : bundled_fixtures()) {
        if (f.source != "paper") continue;
        FixtureDiffReport r = fixture_diff(f.series);
        if (!r.hard_pass) all = false;
        d << f.series << ":" << r.classification << (r.hard_pass ? "" : "(HARD FAIL)")
          << " ";
    }
    return {all, d.str()};
}

Outcome oracle_equivalence() {
    std::size_t checks = 0, failures = 0;
    for (const auto& id : all_series_ids()) {
        SeriesSpec spec = make_series(id);
        const bool wide = id.name() == "chi_6" || id.name() == "chi_m6";
        // Oracle enumeration depth explodes for the base-5 characters below
        // 1/2, so those two are checked on their bases >= 1/2 only.
        const Rational theta = wide ? Rational(1, 2) : Rational(1, 5);
        Expansion e = reciprocal_expansion(spec, theta, 4096);
        for (const auto& t : e.terms) {
            ++checks;
            if (oracle_coefficient(spec, t.base, 24) != t.coeff) ++failures;
        }
    }
    std::ostringstream d;
    d << checks << " coefficients cross-checked, " << failures << " disagreements";
    return {failures == 0 && checks >= 150, d.str()};
}

Outcome numeric_residuals(const PrecisionContext& ctx) {
    bool all = true;
    std::ostringstream d;
    for (const auto& id : all_series_ids()) {
        SeriesSpec spec = make_series(id);
        const Rational b1 = leading_base(spec);
        const Rational theta = validation_threshold(b1);
        const long s = validation_s(b1);
        Expansion e = reciprocal_expansion(spec, theta, 4096);
        ValidationReport r = validate_expansion(
            spec, e, BigReal::of(s, ctx.bits + ctx.guard_bits), ctx);
        if (!r.pass) {
            all = false;
            d << id.name() << ":FAIL(residual " << r.residual.str(3) << " > bound "
              << r.bound.str(3) << ") ";
        }
    }
    if (all) d << "all " << all_series_ids().size() << " series within bound";
    return {all, d.str()};
}

Outcome sign_audits() {
    struct Case {
        const char* series;
        SignLaw law;
    };
    const Case cases[] = {{"zeta_minus_1", SignLaw::V},
                          {"dirichlet_lambda_minus_1", SignLaw::V},
                          {"chi_6", SignLaw::V},
                          {"chi_10", SignLaw::V},
                          {"one_minus_eta", SignLaw::A}};
    bool all = true;
    std::ostringstream d;
    for (const auto& c : cases) {
        SeriesSpec spec = make_series(parse_series_id(c.series));
        Expansion e = reciprocal_expansion(spec, Rational(1, 5), 4096);
        AuditReport r = audit_signs(e, c.law);
        if (r.mismatched != 0) all = false;
        d << c.series << "(" << r.law << "):" << r.matched << "/" << r.mismatched << "/"
          << r.unclassified << " ";
    }
    d << "(matched/mismatched/unclassified)";
    return {all, d.str()};
}

bool probe_within(const std::string& name, const Rational& x, std::optional<long> n,
                  double tol, const PrecisionContext& ctx, std::ostringstream& d) {
    ProbeResult r = limit_probe(name, x, n, ctx);
    const double dev = r.deviation.to_double();
    const bool ok = dev <= tol;
    d << name;
    if (n) d << "[n=" << *n << "]";
    d << ":" << (ok ? "ok" : "FAIL") << "(dev " << dev << " tol " << tol << ") ";
    return ok;
}

Outcome gamma_pole_limits(const PrecisionContext& ctx) {
    bool all = true;
    std::ostringstream d;
    const Rational xq(1, 10000);
    all &= probe_within("pole_quadratic", xq, 0, 1e-7, ctx, d);
    all &= probe_within("pole_quadratic", xq, 3, 1e-6, ctx, d);
    all &= probe_within("consecutive_ratio", Rational(1, 1000), 0, 1e-2, ctx, d);
    for (long n : {0L, 1L, 2L, 5L})
        all &= probe_within("pole_linear", Rational(1, 1000000), n, 1e-5, ctx, d);
    return {all, d.str()};
}

Outcome infinity_limits(const PrecisionContext& ctx) {
    bool all = true;
    std::ostringstream d;
    all &= probe_within("cloitre", Rational(64), std::nullopt,
                        2.0 * std::pow(8.0 / 9.0, 64), ctx, d);
    all &= probe_within("cloitre_extended", Rational(64), std::nullopt,
                        2.0 * std::pow(4.0 / 7.0, 64), ctx, d);
    all &= probe_within("zeta_log_difference", Rational(40), std::nullopt, 1e-3, ctx, d);
    const double lam_tol = 2.0 * std::pow(9.0 / 11.0, 40);
    all &= probe_within("lambda_iterate", Rational(40), std::nullopt, lam_tol, ctx, d);
    all &= probe_within("gamma_lambda", Rational(40), std::nullopt, lam_tol, ctx, d);
    for (long n : {1L, 2L}) {
        double prev = -1.0;
        bool decreasing = true;
        for (long x : {16L, 32L, 48L}) {
            ProbeResult r = limit_probe("gh_gamma", Rational(x), n, ctx);
            const double dev = r.deviation.to_double();
            if (prev >= 0 && dev >= prev) decreasing = false;
            prev = dev;
        }
        if (!decreasing) all = false;
        d << "gh_gamma[n=" << n << "]:" << (decreasing ? "decreasing" : "NOT DECREASING")
          << " ";
    }
    return {all, d.str()};
}

Outcome pole_series_consistency(const PrecisionContext& ctx) {
    bool all = true;
    std::ostringstream d;
    for (long n : {0L, 1L, 2L, 5L}) {
        PoleSeries ps = lngamma_pole_series(static_cast<unsigned>(n), 12);
        const Rational x(1, 100);
        const Rational arg = Rational(-n) + (n % 2 == 0 ? x : -x);
        BigReal direct =
            lngamma_real(BigReal::of(arg, ctx.bits + ctx.guard_bits), ctx).log_abs;
        BigReal gap = abs(direct - pole_series_partial_sum(ps, x, ctx));
        const bool ok = gap.to_double() <= 1e-24;
        if (!ok) all = false;
        d << "n=" << n << ":" << (ok ? "ok" : "FAIL") << "(gap " << gap.str(3) << ") ";
    }
    return {all, d.str()};
}

// -- criterion 9 helpers ---------------------------------------------------

bool rational_properties() {
    if (parse_rational("6/4") != Rational(3, 2)) return false;
    if (to_fraction_string(parse_rational("2")) != "2/1") return false;
    if (pow_int(Rational(2, 3), 3) != Rational(8, 27)) return false;
    Expansion e = reciprocal_expansion(make_series(parse_series_id("zeta_minus_1")),
                                       Rational(1, 5));
    for (const auto& t : e.terms)
        if (!is_reduced(t.base) || !is_reduced(t.coeff)) return false;
    return true;
}

bool merge_uniqueness() {
    Expansion e = reciprocal_expansion(make_series(parse_series_id("one_minus_eta")),
                                       Rational(1, 5));
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        if (e.terms[i].coeff == 0) return false;
        if (i > 0 && !(e.terms[i].base < e.terms[i - 1].base)) return false;
    }
    return true;
}

bool transform_round_trip() {
    // exp(log(1+u)) - 1 must reproduce u exactly above the floor.
    Expansion u;
    u.source = "probe";
    u.threshold = Rational(1, 40);
    u.terms = {{Rational(1), Rational(1, 2)}, {Rational(-1, 3), Rational(2, 5)}};
    const Rational floor(1, 40);
    auto log_coeffs = [](unsigned j) {
        return Rational(j % 2 == 1 ? 1 : -1, static_cast<long>(j));
    };
    auto exp_coeffs = [](unsigned j) -> Rational {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), j);
        return Rational(1) / Rational(f);
    };
    Expansion v = analytic_transform(log_coeffs, u, floor);
    Expansion w = analytic_transform(exp_coeffs, v, floor);
    return diff_expansions(w, u).empty();
}

unsigned sieve_omega(unsigned n, const std::vector<unsigned>& spf) {
    unsigned c = 0;
    while (n > 1) {
        n /= spf[n];
        ++c;
    }
    return c;
}

bool sign_law_case_split() {
    // Smallest-prime-factor sieve: an Omega implementation independent of the
    // trial-division one behind lambda_V / lambda_A.
    const unsigned N = 61;
    std::vector<unsigned> spf(N, 0);
    for (unsigned i = 2; i < N; ++i)
        if (spf[i] == 0)
            for (unsigned j = i; j < N; j += i)
                if (spf[j] == 0) spf[j] = i;
    for (unsigned p = 1; p <= 60; ++p)
        for (unsigned q = 1; q <= 60; ++q) {
            if (std::gcd(p, q) != 1) {
                bool threw = false;
                try {
                    lambda_V(p, q);
                } catch (const NotReduced&) {
                    threw = true;
                }
                if (!threw) return false;
                continue;
            }
            const int gap = static_cast<int>(sieve_omega(p, spf)) -
                            static_cast<int>(sieve_omega(q, spf));
            const int lq = sieve_omega(q, spf) % 2 == 0 ? 1 : -1;
            Prediction ev = p == 1 && q != 1 ? Prediction::plus
                            : gap == 1 || gap == -1
                                ? (lq > 0 ? Prediction::plus : Prediction::minus)
                            : gap == 0 ? (lq > 0 ? Prediction::minus : Prediction::plus)
                                       : Prediction::unclassified;
            Prediction ea = gap == 1 || gap == -1 ? Prediction::plus
                            : gap == 0            ? Prediction::minus
                                                  : Prediction::unclassified;
            if (lambda_V(p, q) != ev || lambda_A(p, q) != ea) return false;
        }
    return true;
}

bool evaluator_identities(const PrecisionContext& ctx) {
    const long wp = ctx.bits + ctx.guard_bits;
    auto close = [](const BigReal& a, const BigReal& b) {
        const double gap = abs(a - b).to_double();
        return gap <= a.err() + b.err() + 1e-60;
    };
    for (double sd : {1.5, 2.0, 3.0, 10.0, 40.0}) {
        BigReal s = BigReal::of(sd, wp);
        BigReal z = zeta_real(s, ctx);
        BigReal one = BigReal::of(1L, wp);
        if (!close(eta_real(s, ctx), (one - pow(rational(2), one - s)) * z)) return false;
        if (!close(dirichlet_lambda_real(s, ctx), (one - pow(rational(2), -s)) * z))
            return false;
    }
    for (long sd : {2L, 3L, 10L}) {
        BigReal s = BigReal::of(sd, wp);
        if (!close(hurwitz_zeta_real(s, Rational(1), ctx), zeta_real(s, ctx)))
            return false;
    }
    BigReal one_r = BigReal::of(1L, wp);
    if (!close(eta_real(one_r, ctx), log(BigReal::of(2L, wp)))) return false;
    PrecisionContext pc = ctx;
    BigReal pi4 = const_pi(pc) / BigReal::of(4L, wp);
    if (!close(beta_real(one_r, ctx), pi4)) return false;
    return true;
}

bool error_bound_honesty(const PrecisionContext& ctx) {
    PrecisionContext finer{ctx.bits + 64, ctx.guard_bits};
    auto honest = [&](const std::function<BigReal(const PrecisionContext&)>& f) {
        BigReal coarse = f(ctx);
        BigReal fine = f(finer);
        return abs(coarse - fine).to_double() <= coarse.err() + 1e-300;
    };
    for (double sd : {1.5, 2.0, 7.0, 40.0})
        if (!honest([&](const PrecisionContext& c) {
                return zeta_real(BigReal::of(sd, c.bits + c.guard_bits), c);
            }))
            return false;
    for (double sd : {0.7, 3.0})
        if (!honest([&](const PrecisionContext& c) {
                return eta_real(BigReal::of(sd, c.bits + c.guard_bits), c);
            }))
            return false;
    for (double xd : {0.5, -1.5, 11.25})
        if (!honest([&](const PrecisionContext& c) {
                return lngamma_real(BigReal::of(xd, c.bits + c.guard_bits), c).log_abs;
            }))
            return false;
    if (!honest([&](const PrecisionContext& c) {
            return hurwitz_zeta_real(BigReal::of(2L, c.bits + c.guard_bits),
                                     Rational(3, 2), c);
        }))
        return false;
    return true;
}

Outcome property_suites(const PrecisionContext& ctx) {
    struct Sub {
        const char* name;
        bool ok;
    };
    const Sub subs[] = {
        {"rational_reduction", rational_properties()},
        {"merge_uniqueness", merge_uniqueness()},
        {"transform_round_trip", transform_round_trip()},
        {"sign_law_case_split", sign_law_case_split()},
        {"evaluator_identities", evaluator_identities(ctx)},
        {"error_bound_honesty", error_bound_honesty(ctx)},
    };
    bool all = true;
    std::ostringstream d;
    for (const auto& s : subs) {
        if (!s.ok) all = false;
        d << s.name << ":" << (s.ok ? "ok" : "FAIL") << " ";
    }
    return {all, d.str()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const PrecisionContext& ctx) {
    std::vector<CriterionResult> out;
    out.push_back(run_one(1, "zeta reciprocal table reproduced exactly", zeta_table));
    out.push_back(run_one(2, "catalog tables match their transcriptions", catalog_tables));
    out.push_back(run_one(3, "oracle equivalence on all cataloged series",
                          oracle_equivalence));
    out.push_back(run_one(4, "numeric residuals within first-omitted-term bound",
                          [&] { return numeric_residuals(ctx); }));
    out.push_back(run_one(5, "sign-law audits have zero mismatches", sign_audits));
    out.push_back(
        run_one(6, "gamma-pole limit probes", [&] { return gamma_pole_limits(ctx); }));
    out.push_back(run_one(7, "infinity limit probes", [&] { return infinity_limits(ctx); }));
    out.push_back(run_one(8, "log-gamma pole-series consistency",
                          [&] { return pole_series_consistency(ctx); }));
    out.push_back(run_one(9, "property suites", [&] { return property_suites(ctx); }));
    return out;
}

}  // namespace lrec

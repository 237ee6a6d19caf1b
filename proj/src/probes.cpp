#include "lrec/probes.hpp"

#include <functional>
#include <map>

#include "lrec/catalog.hpp"
#include "lrec/expansion_core.hpp"
#include "lrec/functions.hpp"
#include "lrec/number_theory.hpp"

namespace lrec {

namespace {

long wp_of(const PrecisionContext& ctx) { return ctx.bits + ctx.guard_bits; }

BigReal real_of(const Rational& x, const PrecisionContext& ctx) {
    return BigReal::of(x, wp_of(ctx));
}

BigReal one_of(const PrecisionContext& ctx) { return BigReal::of(1L, wp_of(ctx)); }

BigReal ln2(const PrecisionContext& ctx) { return log(BigReal::of(2L, wp_of(ctx))); }

BigReal ln2_power(long n, const PrecisionContext& ctx) {
    BigReal r = one_of(ctx);
    BigReal l = ln2(ctx);
    for (long i = 0; i < n; ++i) r = r * l;
    return r;
}

BigReal zeta2(const PrecisionContext& ctx) {
    return zeta_real(BigReal::of(2L, wp_of(ctx)), ctx);
}

Rational factorial_rat(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

// --- the iterated maps of the infinity-limit formulas ---------------------

BigReal f1(const BigReal& x, const PrecisionContext& ctx) {
    BigReal inner = log(zeta_real(x, ctx)) + one_of(ctx);
    return log(zeta_real(inner, ctx));
}

BigReal f2(const BigReal& x, const PrecisionContext& ctx) {
    return log(zeta_real(zeta_real(x, ctx), ctx));
}

BigReal f2_prose(const BigReal& x, const PrecisionContext& ctx) {
    return abs(log(abs(log(zeta_real(x, ctx)))));
}

BigReal g_map(const BigReal& x, const PrecisionContext& ctx) {
    return abs(log(abs(log(eta_real(x, ctx)))));
}

BigReal h_map(const BigReal& x, const PrecisionContext& ctx) {
    return log(abs(zeta_real(eta_real(x, ctx), ctx)));
}

using Map = BigReal (*)(const BigReal&, const PrecisionContext&);

BigReal iterate(Map f, BigReal x, long n, const PrecisionContext& ctx) {
    for (long i = 0; i < n; ++i) x = f(x, ctx);
    return x;
}

/// 2^{x (ln 2)^{n-1}} [g^n(x) - h^n(x)], the omega bracket shared by the
/// gh-difference and omega-ratio probes.
BigReal omega_bracket(const Rational& x, long n, const PrecisionContext& ctx) {
    BigReal X = real_of(x, ctx);
    BigReal expo = X * ln2_power(n - 1, ctx);
    BigReal amp = pow(rational(2), expo);
    return amp * (iterate(g_map, X, n, ctx) - iterate(h_map, X, n, ctx));
}

// --- the gamma-pole bracket ------------------------------------------------

BigReal lngamma_at(const Rational& arg, const PrecisionContext& ctx) {
    return lngamma_real(real_of(arg, ctx), ctx).log_abs;
}

/// 2 ln(n! x) + ln|Gamma(-n-x)| + ln|Gamma(-n+x)|.
BigReal symmetric_pole_sum(long n, const Rational& x, const PrecisionContext& ctx) {
    BigReal two = BigReal::of(2L, wp_of(ctx));
    return two * log(real_of(factorial_rat(n) * x, ctx)) +
           lngamma_at(Rational(-n) - x, ctx) + lngamma_at(Rational(-n) + x, ctx);
}

/// symmetric_pole_sum minus its known x^2 H_n^{(2)} part; the quantity whose
/// ratio across consecutive poles the consecutive-singularity probes take.
BigReal cleaned_pole_sum(long n, const Rational& x, const PrecisionContext& ctx) {
    Rational h2 = harmonic_number(static_cast<unsigned>(n), 2);
    return symmetric_pole_sum(n, x, ctx) - real_of(x * x * h2, ctx);
}

BigReal consecutive_target(long n, const PrecisionContext& ctx) {
    // 3/((n+1)^4 pi^2) = 1/(2 (n+1)^4 zeta(2))
    Rational c(1, 2 * (n + 1) * (n + 1) * (n + 1) * (n + 1));
    return real_of(c, ctx) / zeta2(ctx);
}

// --- registry --------------------------------------------------------------

struct ProbeDef {
    ProbeInfo info;
    // returns (value, target)
    std::function<std::pair<BigReal, BigReal>(const Rational&, long, const PrecisionContext&)>
        eval;
};

void require_small(const Rational& x) {
    if (x <= 0 || x > Rational(1, 4)) throw OutOfDomain("pole probe needs 0 < x <= 1/4");
}

void require_large(const Rational& x) {
    if (x < 2) throw OutOfDomain("infinity probe needs x >= 2");
}

void require_n_range(long n, long lo, long hi) {
    if (n < lo || n > hi)
        throw OutOfDomain("probe order n outside supported range [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]");
}

std::pair<BigReal, BigReal> ln2_iterate(Map f, const Rational& x, long n,
                                        const PrecisionContext& ctx) {
    require_large(x);
    require_n_range(n, 0, 8);
    BigReal X = real_of(x, ctx);
    return {iterate(f, X, n, ctx) / X, ln2_power(n, ctx)};
}

const std::map<std::string, ProbeDef>& registry() {
    static const std::map<std::string, ProbeDef> defs = [] {
        std::map<std::string, ProbeDef> m;
        auto add = [&m](std::string name, bool needs_n, std::string desc, std::string order,
                        auto fn) {
            ProbeDef d;
            d.info = ProbeInfo{name, needs_n, std::move(desc), order};
            d.eval = fn;
            m.emplace(std::move(name), std::move(d));
        };

        add("pole_linear", true,
            "[ln(n! x) + ln|Gamma(-n + (-1)^n x)|] / x -> (-1)^{n+1} (gamma - H_n)", "O(x)",
            [](const Rational& x, long n, const PrecisionContext& ctx) {
                require_small(x);
                require_n_range(n, 0, 40);
                Rational arg = Rational(-n) + (n % 2 == 0 ? x : -x);
                BigReal value =
                    (log(real_of(factorial_rat(n) * x, ctx)) + lngamma_at(arg, ctx)) /
                    real_of(x, ctx);
                BigReal gap =
                    euler_gamma(ctx) - real_of(harmonic_number(static_cast<unsigned>(n)), ctx);
                BigReal target = n % 2 == 0 ? -gap : gap;
                return std::pair{value, target};
            });
        add("pole_quadratic", true,
            "[2 ln(n! x) + ln|Gamma(-n-x)| + ln|Gamma(-n+x)|] / x^2 -> zeta(2) + H_n^{(2)}",
            "O(x^2)", [](const Rational& x, long n, const PrecisionContext& ctx) {
                require_small(x);
                require_n_range(n, 0, 40);
                BigReal value = symmetric_pole_sum(n, x, ctx) / real_of(x * x, ctx);
                BigReal target =
                    zeta2(ctx) + real_of(harmonic_number(static_cast<unsigned>(n), 2), ctx);
                return std::pair{value, target};
            });
        add("consecutive_ratio", true,
            "(1/x^2)[1 - N_n(x)/N_{n+1}(x)] across consecutive Gamma poles -> "
            "3/((n+1)^4 pi^2)",
            "O(x^2)", [](const Rational& x, long n, const PrecisionContext& ctx) {
                require_small(x);
                require_n_range(n, 0, 30);
                BigReal ratio = cleaned_pole_sum(n, x, ctx) / cleaned_pole_sum(n + 1, x, ctx);
                BigReal value = (one_of(ctx) - ratio) / real_of(x * x, ctx);
                return std::pair{value, consecutive_target(n, ctx)};
            });
        add("consecutive_log", true,
            "(1/x^2) ln[N_n(x)/N_{n+1}(x)] across consecutive Gamma poles -> "
            "-3/((n+1)^4 pi^2)",
            "O(x^2)", [](const Rational& x, long n, const PrecisionContext& ctx) {
                require_small(x);
                require_n_range(n, 0, 30);
                BigReal ratio = cleaned_pole_sum(n, x, ctx) / cleaned_pole_sum(n + 1, x, ctx);
                BigReal value = log(ratio) / real_of(x * x, ctx);
                return std::pair{value, -consecutive_target(n, ctx)};
            });
        add("ln2_iterate_f1", true, "f1^n(x)/x -> (ln 2)^n with f1 = ln zeta(ln zeta + 1)",
            "O((2/3)^x / x)", [](const Rational& x, long n, const PrecisionContext& ctx) {
                return ln2_iterate(f1, x, n, ctx);
            });
        add("ln2_iterate_f2", true, "f2^n(x)/x -> (ln 2)^n with f2 = ln zeta(zeta(x))",
            "O((2/3)^x / x)", [](const Rational& x, long n, const PrecisionContext& ctx) {
                return ln2_iterate(f2, x, n, ctx);
            });
        add("ln2_iterate_f2_prose", true,
            "|ln|ln zeta(x)||^(n iterates)/x -> (ln 2)^n (prose reading of f2, with "
            "absolute values)",
            "O((2/3)^x / x)", [](const Rational& x, long n, const PrecisionContext& ctx) {
                return ln2_iterate(f2_prose, x, n, ctx);
            });
        add("ln2_iterate_g", true, "g^n(x)/x -> (ln 2)^n with g = |ln|ln eta||",
            "O((2/3)^x / x)", [](const Rational& x, long n, const PrecisionContext& ctx) {
                return ln2_iterate(g_map, x, n, ctx);
            });
        add("ln2_iterate_h", true, "h^n(x)/x -> (ln 2)^n with h = ln|zeta(eta(x))|",
            "O((2/3)^x / x)", [](const Rational& x, long n, const PrecisionContext& ctx) {
                return ln2_iterate(h_map, x, n, ctx);
            });
        add("zeta_log_difference", false,
            "2^x [ln zeta(ln zeta(x) + 1) - ln zeta(zeta(x))] -> 1/2", "O(x (2/3)^x)",
            [](const Rational& x, long, const PrecisionContext& ctx) {
                require_large(x);
                BigReal X = real_of(x, ctx);
                BigReal value = pow(rational(2), X) * (f1(X, ctx) - f2(X, ctx));
                return std::pair{value, one_of(ctx) / BigReal::of(2L, wp_of(ctx))};
            });
        add("gh_gamma", true,
            "2^{x (ln 2)^{n-1}} [g^n(x) - h^n(x)] -> gamma - 1/2",
            "decreasing in x; no closed-form rate",
            [](const Rational& x, long n, const PrecisionContext& ctx) {
                require_large(x);
                require_n_range(n, 1, 8);
                BigReal target =
                    euler_gamma(ctx) - one_of(ctx) / BigReal::of(2L, wp_of(ctx));
                return std::pair{omega_bracket(x, n, ctx), target};
            });
        add("fh_gamma", false,
            "2^{x-1} [f(x) - h(x)] -> gamma (f taken as f1; the source statement does "
            "not pin f to f1 or f2)",
            "decreasing in x; no closed-form rate",
            [](const Rational& x, long, const PrecisionContext& ctx) {
                require_large(x);
                BigReal X = real_of(x, ctx);
                BigReal amp = pow(rational(2), X - one_of(ctx));
                BigReal value = amp * (f1(X, ctx) - h_map(X, ctx));
                return std::pair{value, euler_gamma(ctx)};
            });
        add("omega_ratio", true,
            "[w(x,n+1) - w(x,n)] / [ln w(x,n+1) - ln w(x,n)] -> gamma - 1/2, "
            "w the gh-difference bracket",
            "decreasing in x; no closed-form rate",
            [](const Rational& x, long n, const PrecisionContext& ctx) {
                require_large(x);
                require_n_range(n, 1, 7);
                BigReal w0 = omega_bracket(x, n, ctx);
                BigReal w1 = omega_bracket(x, n + 1, ctx);
                BigReal value = (w1 - w0) / (log(w1) - log(w0));
                BigReal target =
                    euler_gamma(ctx) - one_of(ctx) / BigReal::of(2L, wp_of(ctx));
                return std::pair{value, target};
            });
        add("cloitre", false, "zeta(zeta(x)) - 2^x + (4/3)^x + 1 -> gamma", "O((8/9)^x)",
            [](const Rational& x, long, const PrecisionContext& ctx) {
                require_large(x);
                BigReal X = real_of(x, ctx);
                BigReal value = zeta_real(zeta_real(X, ctx), ctx) - pow(rational(2), X) +
                                pow(rational(4, 3), X) + one_of(ctx);
                return std::pair{value, euler_gamma(ctx)};
            });
        add("cloitre_extended", false,
            "zeta(zeta(x)) minus the zeta reciprocal expansion through base 16/27 -> gamma",
            "O((4/7)^x)", [](const Rational& x, long, const PrecisionContext& ctx) {
                require_large(x);
                BigReal X = real_of(x, ctx);
                Expansion e = reciprocal_expansion(
                    make_series(parse_series_id("zeta_minus_1")), Rational(16, 27));
                BigReal value =
                    zeta_real(zeta_real(X, ctx), ctx) - expansion_eval(e, X, ctx);
                return std::pair{value, euler_gamma(ctx)};
            });
        add("cloitre_loglog", false,
            "zeta[ln(ln(ln zeta(x) + 1) + 1) + 1] - 2^x + (4/3)^x - 1/2 -> gamma",
            "O((8/9)^x)", [](const Rational& x, long, const PrecisionContext& ctx) {
                require_large(x);
                BigReal X = real_of(x, ctx);
                BigReal one = one_of(ctx);
                BigReal inner = log(log(log(zeta_real(X, ctx)) + one) + one) + one;
                BigReal value = zeta_real(inner, ctx) - pow(rational(2), X) +
                                pow(rational(4, 3), X) -
                                one / BigReal::of(2L, wp_of(ctx));
                return std::pair{value, euler_gamma(ctx)};
            });
        add("lambda_renorm", false,
            "lambda(1 + x) - 1/(2x) -> (gamma + ln 2)/2, the renormalized value of "
            "lambda at its pole",
            "O(x)", [](const Rational& x, long, const PrecisionContext& ctx) {
                require_small(x);
                BigReal value = dirichlet_lambda_real(real_of(1 + x, ctx), ctx) -
                                real_of(Rational(1) / (2 * x), ctx);
                BigReal target =
                    (euler_gamma(ctx) + ln2(ctx)) / BigReal::of(2L, wp_of(ctx));
                return std::pair{value, target};
            });
        add("lambda_iterate", false,
            "lambda(lambda(x)) - (1/2)[3^x - (9/5)^x - (9/7)^x + (27/25)^x - 1] -> "
            "(gamma + ln 2)/2",
            "O((9/11)^x)", [](const Rational& x, long, const PrecisionContext& ctx) {
                require_large(x);
                BigReal X = real_of(x, ctx);
                BigReal half = one_of(ctx) / BigReal::of(2L, wp_of(ctx));
                BigReal bracket = pow(rational(3), X) - pow(rational(9, 5), X) -
                                  pow(rational(9, 7), X) + pow(rational(27, 25), X) -
                                  one_of(ctx);
                BigReal value =
                    dirichlet_lambda_real(dirichlet_lambda_real(X, ctx), ctx) - half * bracket;
                BigReal target = (euler_gamma(ctx) + ln2(ctx)) * half;
                return std::pair{value, target};
            });
        add("gamma_lambda", false,
            "-[Gamma(lambda(x) - 1) - 3^x + (9/5)^x + (9/7)^x - (27/25)^x + 1] -> gamma",
            "O((9/11)^x)", [](const Rational& x, long, const PrecisionContext& ctx) {
                require_large(x);
                BigReal X = real_of(x, ctx);
                BigReal delta = dirichlet_lambda_real(X, ctx) - one_of(ctx);
                BigReal value = -(gamma_real(delta, ctx) - pow(rational(3), X) +
                                  pow(rational(9, 5), X) + pow(rational(9, 7), X) -
                                  pow(rational(27, 25), X) + one_of(ctx));
                return std::pair{value, euler_gamma(ctx)};
            });
        return m;
    }();
    return defs;
}

}  // namespace

const std::vector<ProbeInfo>& probe_catalog() {
    static const std::vector<ProbeInfo> infos = [] {
        std::vector<ProbeInfo> v;
        for (const auto& [name, def] : registry()) v.push_back(def.info);
        return v;
    }();
    return infos;
}

ProbeResult limit_probe(const std::string& name, const Rational& x, std::optional<long> n,
                        const PrecisionContext& ctx) {
    auto it = registry().find(name);
    if (it == registry().end()) throw UnknownProbe(name);
    const ProbeDef& def = it->second;
    if (def.info.needs_n && !n) throw OutOfDomain("probe '" + name + "' requires n");

    auto [value, target] = def.eval(x, n.value_or(0), ctx);
    ProbeResult r;
    r.name = name;
    r.x = x;
    r.n = def.info.needs_n ? n : std::nullopt;
    r.value = value;
    r.target = target;
    r.deviation = abs(value - target);
    r.expected_order = def.info.expected_order;

    const double errs = value.err() + target.err();
    const double dv = r.deviation.abs_double();
    if (dv > 0 && errs >= 0.5 * dv) throw PrecisionInsufficient();
    return r;
}

}  // namespace lrec

// lrec: reciprocal expansions of generalized Dirichlet series, sign-law
// audits, and high-precision limit probes. Subcommands: catalog, expand,
// oracle, audit, validate, limits, fixtures, acceptance.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "lrec/acceptance.hpp"
#include "lrec/catalog.hpp"
#include "lrec/expansion_core.hpp"
#include "lrec/fixtures.hpp"
#include "lrec/functions.hpp"
#include "lrec/probes.hpp"
#include "lrec/serialize.hpp"
#include "lrec/sign_laws.hpp"
#include "lrec/validate.hpp"

namespace {

using namespace lrec;
using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitComputational = 1;

/// Parses "p/q", integers, and plain decimals ("0.001", "1e-4") into an exact
/// rational.
Rational parse_real_rational(const std::string& text) {
    if (text.find('/') != std::string::npos) return parse_rational(text);
    std::string mantissa = text;
    long exp10 = 0;
    if (auto e = text.find_first_of("eE"); e != std::string::npos) {
        mantissa = text.substr(0, e);
        exp10 = std::stol(text.substr(e + 1));
    }
    std::string digits = mantissa;
    if (auto dot = mantissa.find('.'); dot != std::string::npos) {
        digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
        exp10 -= static_cast<long>(mantissa.size() - dot - 1);
    }
    if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("bad number '" + text + "'");
    Rational r(mpz_class(digits, 10));
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exp10)));
    if (exp10 >= 0)
        r *= Rational(p10);
    else
        r /= Rational(p10);
    r.canonicalize();
    return r;
}

struct Options {
    std::string threshold = "1/5";
    std::size_t term_cap = 512;
    long bits = 256;
    std::string format = "text";
    bool unreduced = false;
};

PrecisionContext context_of(const Options& o) { return PrecisionContext{o.bits, 16}; }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string signed_coeff(const Rational& c) {
    return (c > 0 ? "+" : "-") + to_string(abs(c));
}

/// Structured alternative renderer: base as a ratio of prime powers
/// (e.g. 32/135 -> 2^5/3^3*5), mirroring how composite bases arise as
/// products of stream bases.
std::string factored_base(const Rational& b) {
    auto part = [](const mpz_class& z) -> std::string {
        if (z == 1) return "1";
        std::string out;
        mpz_class m = z;
        for (mpz_class p = 2; m > 1; ++p) {
            int e = 0;
            while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
                m /= p;
                ++e;
            }
            if (e == 0) continue;
            if (!out.empty()) out += "*";
            out += p.get_str();
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out;
    };
    return part(b.get_num()) + "/" + part(b.get_den());
}

void print_expansion(const Expansion& e, bool unreduced) {
    std::cout << "series " << e.source << "  threshold " << to_string(e.threshold)
              << "  terms " << e.terms.size() << "\n";
    for (const auto& t : e.terms) {
        std::cout << "  " << signed_coeff(t.coeff) << " * ("
                  << (unreduced ? factored_base(t.base) : to_string(t.base)) << ")^s\n";
    }
}

int cmd_catalog(const Options& o) {
    auto listing = catalog_listing();
    if (o.format == "json") {
        emit(catalog_json(listing));
        return 0;
    }
    for (const auto& c : listing)
        std::cout << c.name << "  b1=" << to_string(c.leading_base) << "  ["
                  << c.orientation << "]  " << c.description << "\n";
    std::cout << "probes:\n";
    for (const auto& p : probe_catalog())
        std::cout << "  " << p.name << (p.needs_n ? " (needs --n)" : "") << "  "
                  << p.description << "  [" << p.expected_order << "]\n";
    return 0;
}

int cmd_expand(const std::string& series, const Options& o) {
    SeriesSpec spec = make_series(parse_series_id(series));
    Expansion e = reciprocal_expansion(spec, parse_rational(o.threshold), o.term_cap);
    if (o.format == "json")
        emit(expansion_json(e));
    else
        print_expansion(e, o.unreduced);
    return 0;
}

int cmd_oracle(const std::string& series, const std::string& base, unsigned depth_cap,
               const Options& o) {
    SeriesSpec spec = make_series(parse_series_id(series));
    Rational c = oracle_coefficient(spec, parse_rational(base), depth_cap);
    if (o.format == "json")
        emit(json{{"series", series},
                  {"base", to_fraction_string(parse_rational(base))},
                  {"coeff", to_fraction_string(c)}});
    else
        std::cout << to_fraction_string(c) << "\n";
    return 0;
}

int cmd_audit(const std::string& series, const std::string& law, const Options& o) {
    SeriesSpec spec = make_series(parse_series_id(series));
    Expansion e = reciprocal_expansion(spec, parse_rational(o.threshold), o.term_cap);
    AuditReport r = audit_signs(e, law == "A" ? SignLaw::A : SignLaw::V);
    if (o.format == "json") {
        emit(audit_json(r));
    } else {
        std::cout << "series " << r.series << "  law " << r.law << "  matched "
                  << r.matched << "  mismatched " << r.mismatched << "  unclassified "
                  << r.unclassified << "\n";
        for (const auto& v : r.verdicts) {
            const char* tag = v.matches == SignVerdict::Match::yes   ? "ok"
                              : v.matches == SignVerdict::Match::no  ? "MISMATCH"
                                                                     : "unclassified";
            std::cout << "  " << to_string(v.base) << "  sign "
                      << (v.actual_sign > 0 ? "+" : "-") << "  " << tag << "\n";
        }
    }
    return r.mismatched == 0 ? 0 : kExitComputational;
}

int cmd_validate(const std::string& series, const std::string& s_text, const Options& o) {
    SeriesSpec spec = make_series(parse_series_id(series));
    PrecisionContext ctx = context_of(o);
    Expansion e = reciprocal_expansion(spec, parse_rational(o.threshold), o.term_cap);
    BigReal s = BigReal::of(parse_real_rational(s_text), ctx.bits + ctx.guard_bits);
    ValidationReport r = validate_expansion(spec, e, s, ctx);
    if (o.format == "json") {
        emit(validation_json(r));
    } else {
        std::cout << "series " << r.series << "  threshold " << to_string(r.threshold)
                  << "  s " << r.s.str(10) << "\n"
                  << "  first omitted base " << to_string(r.first_omitted) << "\n"
                  << "  residual " << r.residual.str(40) << "\n"
                  << "  bound    " << r.bound.str(40) << "\n"
                  << "  " << (r.pass ? "PASS" : "FAIL") << "\n";
    }
    return r.pass ? 0 : kExitComputational;
}

int cmd_limits(const std::string& probe, const std::string& x_text,
               std::optional<long> n, const Options& o) {
    ProbeResult r =
        limit_probe(probe, parse_real_rational(x_text), n, context_of(o));
    if (o.format == "json") {
        emit(probe_json(r));
    } else {
        std::cout << "probe " << r.name << "  x " << to_string(r.x);
        if (r.n) std::cout << "  n " << *r.n;
        std::cout << "\n  value     " << r.value.str(40) << "\n  target    "
                  << r.target.str(40) << "\n  deviation " << r.deviation.str(40)
                  << "\n  expected order " << r.expected_order << "\n";
    }
    return 0;
}

int cmd_fixtures(const std::string& series, const std::string& export_dir,
                 const Options& o) {
    if (!export_dir.empty()) {
        for (const auto& f : bundled_fixtures()) {
            std::string path = export_dir + "/" + f.series + "." + f.source + ".json";
            std::ofstream out(path);
            if (!out) throw std::runtime_error("cannot write " + path);
            out << fixture_json(f).dump(2) << "\n";
        }
        std::cout << "exported " << bundled_fixtures().size() << " fixtures to "
                  << export_dir << "\n";
        return 0;
    }
    bool all_pass = true;
    json out = json::array();
    for (const auto& f : bundled_fixtures()) {
        if (f.source != "paper") continue;
        if (!series.empty() && f.series != series) continue;
        FixtureDiffReport r = fixture_diff(f.series);
        all_pass = all_pass && r.hard_pass;
        if (o.format == "json") {
            out.push_back(fixture_diff_json(r));
        } else {
            std::cout << r.series << "  " << r.classification << "  diffs "
                      << r.entries.size() << "  unexpected " << r.unexpected.size()
                      << "  " << (r.hard_pass ? "ok" : "HARD FAIL") << "\n";
            for (const auto& d : r.entries)
                std::cout << "    base " << to_string(d.base) << "  computed "
                          << to_string(d.computed) << "  reference "
                          << to_string(d.reference) << "\n";
        }
    }
    if (series.empty()) {
        CrosscheckReport c = oeis_crosscheck();
        all_pass = all_pass && c.match;
        if (o.format == "json")
            out.push_back(crosscheck_json(c));
        else
            std::cout << "sequence crosscheck " << c.sequence << "  compared "
                      << c.compared << "  " << (c.match ? "match" : "MISMATCH") << "\n";
    }
    if (o.format == "json") emit(out);
    return all_pass ? 0 : kExitComputational;
}

int cmd_acceptance(const Options& o) {
    auto results = run_acceptance(context_of(o));
    bool all = true;
    if (o.format == "json") {
        emit(acceptance_json(results));
        for (const auto& r : results) all = all && r.pass;
    } else {
        for (const auto& r : results) {
            all = all && r.pass;
            std::printf("[%s] criterion %d: %s (%.1fs)\n    %s\n",
                        r.pass ? "PASS" : "FAIL", r.index, r.title.c_str(), r.seconds,
                        r.detail.c_str());
        }
        std::cout << (all ? "ALL CRITERIA PASS" : "SUITE FAILED") << "\n";
    }
    return all ? 0 : kExitComputational;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reciprocal expansions of generalized Dirichlet series"};
    app.require_subcommand(1);

    Options opt;
    std::string series, base, law = "V", s_text = "40", x_text, export_dir;
    long n_value = 0;
    unsigned depth_cap = 24;
    bool n_given = false;

    auto add_common = [&](CLI::App* c, bool with_expand_opts) {
        c->add_option("--bits", opt.bits, "mantissa precision bits")
            ->check(CLI::Range(64L, 100000L));
        c->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        if (with_expand_opts) {
            c->add_option("--threshold", opt.threshold, "keep bases >= p/q");
            c->add_option("--term-cap", opt.term_cap, "maximum number of terms");
        }
    };

    auto* c_catalog = app.add_subcommand("catalog", "list series and probes");
    add_common(c_catalog, false);

    auto* c_expand = app.add_subcommand("expand", "reciprocal expansion of a series");
    c_expand->add_option("series", series)->required();
    add_common(c_expand, true);
    c_expand->add_flag("--unreduced", opt.unreduced,
                       "render bases as prime-power ratios");

    auto* c_oracle = app.add_subcommand("oracle", "direct-enumeration coefficient");
    c_oracle->add_option("series", series)->required();
    c_oracle->add_option("base", base)->required();
    c_oracle->add_option("--depth-cap", depth_cap, "enumeration depth cap");
    add_common(c_oracle, false);

    auto* c_audit = app.add_subcommand("audit", "sign-law audit of an expansion");
    c_audit->add_option("series", series)->required();
    c_audit->add_option("--law", law)->check(CLI::IsMember({"V", "A"}));
    add_common(c_audit, true);

    auto* c_validate = app.add_subcommand("validate", "numeric residual check");
    c_validate->add_option("series", series)->required();
    c_validate->add_option("--s", s_text, "evaluation point");
    add_common(c_validate, true);

    auto* c_limits = app.add_subcommand("limits", "evaluate a limit probe");
    c_limits->add_option("probe", series)->required();
    c_limits->add_option("--x", x_text, "probe input (rational or decimal)")->required();
    auto* n_opt = c_limits->add_option("--n", n_value, "probe index");
    add_common(c_limits, false);

    auto* c_fixtures = app.add_subcommand("fixtures", "diff against transcriptions");
    c_fixtures->add_option("series", series, "restrict to one series");
    c_fixtures->add_option("--export", export_dir, "write fixtures/*.json here");
    add_common(c_fixtures, false);

    auto* c_accept = app.add_subcommand("acceptance", "run the acceptance suite");
    add_common(c_accept, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    n_given = n_opt->count() > 0;
    try {
        if (*c_catalog) return cmd_catalog(opt);
        if (*c_expand) return cmd_expand(series, opt);
        if (*c_oracle) return cmd_oracle(series, base, depth_cap, opt);
        if (*c_audit) return cmd_audit(series, law, opt);
        if (*c_validate) return cmd_validate(series, s_text, opt);
        if (*c_limits)
            return cmd_limits(series, x_text,
                              n_given ? std::optional<long>(n_value) : std::nullopt, opt);
        if (*c_fixtures) return cmd_fixtures(series, export_dir, opt);
        if (*c_accept) return cmd_acceptance(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputational;
    }
    return kExitUsage;
}

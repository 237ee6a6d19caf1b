#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "lrec/functions.hpp"
#include "lrec/probes.hpp"

using namespace lrec;

namespace {

PrecisionContext ctx;

double dev(const std::string& name, const Rational& x, std::optional<long> n = {}) {
    return limit_probe(name, x, n, ctx).deviation.to_double();
}

}  // namespace

TEST_CASE("probe catalog is populated with unique names") {
    const auto& cat = probe_catalog();
    CHECK(cat.size() >= 15);
    std::set<std::string> names;
    for (const auto& p : cat) {
        CHECK(names.insert(p.name).second);
        CHECK(!p.description.empty());
        CHECK(!p.expected_order.empty());
    }
    CHECK(names.count("cloitre") == 1);
    CHECK(names.count("pole_linear") == 1);
}

TEST_CASE("probe argument validation") {
    CHECK_THROWS_AS(limit_probe("no_such_probe", Rational(1, 10), {}, ctx), UnknownProbe);
    // pole probes need n and a small offset
    CHECK_THROWS_AS(limit_probe("pole_linear", Rational(1, 10), {}, ctx), OutOfDomain);
    CHECK_THROWS_AS(limit_probe("pole_linear", Rational(2), 0, ctx), OutOfDomain);
    CHECK_THROWS_AS(limit_probe("pole_linear", Rational(1, 10), 200, ctx), OutOfDomain);
    // infinity probes need a large input
    CHECK_THROWS_AS(limit_probe("cloitre", Rational(1, 2), {}, ctx), OutOfDomain);
}

TEST_CASE("gamma-pole probes hit their documented tolerances") {
    CHECK(dev("pole_quadratic", Rational(1, 10000), 0) <= 1e-7);
    CHECK(dev("pole_quadratic", Rational(1, 10000), 3) <= 1e-6);
    CHECK(dev("consecutive_ratio", Rational(1, 1000), 0) <= 1e-2);
    for (long n : {0L, 1L, 2L, 5L}) {
        CAPTURE(n);
        CHECK(dev("pole_linear", Rational(1, 1000000), n) <= 1e-5);
    }
    // the log-ratio variant converges to the negative of the ratio limit
    ProbeResult lr = limit_probe("consecutive_log", Rational(1, 1000), 0, ctx);
    CHECK(lr.target.sign() < 0);
    CHECK(lr.deviation.to_double() <= 1e-2);
}

TEST_CASE("probes sharpen as they approach their limits") {
    CHECK(dev("pole_linear", Rational(1, 100000), 1) >
          dev("pole_linear", Rational(1, 10000000), 1));
    CHECK(dev("cloitre", Rational(32)) > dev("cloitre", Rational(64)));
    CHECK(dev("lambda_iterate", Rational(20)) > dev("lambda_iterate", Rational(40)));
    CHECK(dev("zeta_log_difference", Rational(20)) >
          dev("zeta_log_difference", Rational(40)));
}

TEST_CASE("iterated-logarithm probes approach powers of ln 2") {
    for (long n : {0L, 1L, 3L}) {
        CAPTURE(n);
        CHECK(dev("ln2_iterate_f1", Rational(48), n) < 1e-2);
        CHECK(dev("ln2_iterate_f2", Rational(48), n) < 1e-2);
    }
    CHECK(dev("gh_gamma", Rational(48), 1) < 1e-3);
    CHECK(dev("omega_ratio", Rational(48), 1) < 1e-2);
}

TEST_CASE("targets are computed from the constants, not hardcoded decimals") {
    ProbeResult r = limit_probe("cloitre", Rational(64), {}, ctx);
    BigReal gamma = euler_gamma(ctx);
    CHECK(abs(r.target - gamma).to_double() < 1e-50);
    ProbeResult r2 = limit_probe("lambda_renorm", Rational(1, 100), {}, ctx);
    BigReal expect =
        (gamma + log(BigReal::of(2L, ctx.bits + ctx.guard_bits))) / BigReal::of(2L, 64);
    CHECK(abs(r2.target - expect).to_double() < 1e-50);
}

TEST_CASE("insufficient precision is reported, not silently returned") {
    PrecisionContext low{64, 16};
    CHECK_THROWS_AS(
        limit_probe("pole_linear", parse_rational("1/1000000000000"), 0, low),
        PrecisionInsufficient);
    CHECK_THROWS_AS(limit_probe("cloitre_extended", Rational(64), {}, low),
                    PrecisionInsufficient);
}

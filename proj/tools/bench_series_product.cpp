// Benchmarks the OpenMP sparse-product kernel against its serial reference on
// progressively deeper zeta reciprocal expansions, and checks they agree.
#include <chrono>
#include <cstdio>
#include <vector>

#include "lrec/catalog.hpp"
#include "lrec/expansion_core.hpp"

using namespace lrec;
using Clock = std::chrono::steady_clock;

namespace {

double time_of(const std::function<std::vector<PowerTerm>()>& fn,
               std::vector<PowerTerm>& out) {
    const auto t0 = Clock::now();
    out = fn();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main() {
    SeriesSpec spec = make_series(parse_series_id("zeta_minus_1"));
    std::printf("%-12s %8s %10s %10s %8s %s\n", "threshold", "terms", "parallel",
                "serial", "speedup", "agree");
    for (const Rational theta : {Rational(1, 40), Rational(1, 90), Rational(1, 160)}) {
        Expansion e = reciprocal_expansion(spec, theta, 1 << 16);
        // Square the expansion's term list: a representative large convolution.
        const Rational floor = theta * theta;
        std::vector<PowerTerm> par, ser;
        const double tp =
            time_of([&] { return series_product(e.terms, e.terms, floor); }, par);
        const double ts = time_of(
            [&] { return series_product_serial(e.terms, e.terms, floor); }, ser);
        std::printf("%-12s %8zu %9.3fs %9.3fs %7.2fx %s\n", to_string(theta).c_str(),
                    e.terms.size(), tp, ts, ts / tp, par == ser ? "yes" : "NO");
        if (par != ser) return 1;
    }
    return 0;
}

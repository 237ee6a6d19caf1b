#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "lrec/acceptance.hpp"

using namespace lrec;

TEST_CASE("all nine acceptance criteria pass at default precision") {
    auto results = run_acceptance(PrecisionContext{});
    REQUIRE(results.size() == 9);
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        std::printf("[%s] criterion %d: %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", r.index,
                    r.title.c_str(), r.seconds);
        CHECK(r.index == static_cast<int>(i) + 1);
        CAPTURE(r.title);
        CAPTURE(r.detail);
        CHECK(r.pass);
    }
    // the timed criteria stay within their budgets
    CHECK(results[0].seconds < 5.0);
    CHECK(results[1].seconds < 30.0);
}

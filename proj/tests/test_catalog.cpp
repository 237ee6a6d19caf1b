#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "lrec/catalog.hpp"
#include "lrec/expansion_core.hpp"
#include "lrec/functions.hpp"

using namespace lrec;

namespace {

PrecisionContext ctx;  // 256 + 16 bits

BigReal at(double s) { return BigReal::of(s, ctx.bits + ctx.guard_bits); }

}  // namespace

TEST_CASE("character tables are completely multiplicative real characters") {
    for (const char* name :
         {"chi_m3", "chi_p3", "chi_m5", "chi_6", "chi_m6", "chi_10", "chi_m10"}) {
        CharacterTable chi = character_from_paper(name);
        REQUIRE(chi.modulus > 0);
        REQUIRE(chi.values.size() == chi.modulus);
        CHECK(chi(1) == 1);
        for (unsigned a = 0; a < chi.modulus; ++a) {
            CHECK((chi.values[a] == -1 || chi.values[a] == 0 || chi.values[a] == 1));
            // zero exactly on residues sharing a factor with the modulus
            CHECK((chi.values[a] == 0) == (std::gcd(a, chi.modulus) != 1));
        }
        for (unsigned a = 1; a < 40; ++a)
            for (unsigned b = 1; b < 40; ++b) CHECK(chi(a) * chi(b) == chi(a * b));
    }
    CHECK_THROWS_AS(character_from_paper("chi_7"), UnknownCharacter);
}

TEST_CASE("series ids parse, render, and enumerate") {
    auto ids = all_series_ids();
    CHECK(ids.size() == 19);
    for (const auto& id : ids) {
        CAPTURE(id.name());
        SeriesId reparsed = parse_series_id(id.name());
        CHECK(reparsed.name() == id.name());
        CHECK_NOTHROW(make_series(id));
    }
    CHECK_THROWS(parse_series_id("no_such_series"));
    CHECK(parse_series_id("hurwitz_zeta:3/2").q == Rational(3, 2));
}

TEST_CASE("streams ascend strictly and lead with a positive coefficient") {
    for (const auto& id : all_series_ids()) {
        CAPTURE(id.name());
        SeriesSpec spec = make_series(id);
        auto stream = spec.open();
        auto first = stream();
        REQUIRE(first.has_value());
        CHECK(first->base > 1);
        CHECK(first->coeff > 0);
        Rational prev = first->base;
        for (int i = 0; i < 200; ++i) {
            auto t = stream();
            if (!t) break;
            CHECK(t->base > prev);
            prev = t->base;
        }
    }
}

TEST_CASE("catalog listing matches the series set") {
    auto listing = catalog_listing();
    auto ids = all_series_ids();
    REQUIRE(listing.size() == ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        CHECK(listing[i].name == ids[i].name());
        SeriesSpec spec = make_series(ids[i]);
        auto first = spec.open()();
        REQUIRE(first.has_value());
        CHECK(listing[i].leading_base == first->base);
    }
}

TEST_CASE("character streams sum to the corresponding L-values") {
    struct Case {
        const char* name;
        int sign;  // +1 for L-1, -1 for 1-L
    };
    for (const Case c : {Case{"chi_m3", -1}, Case{"chi_p3", 1}, Case{"chi_6", 1},
                         Case{"chi_10", 1}, Case{"chi_m10", -1}}) {
        CAPTURE(c.name);
        CharacterTable chi = character_from_paper(c.name);
        BigReal s = at(10.0);
        BigReal direct = series_eval(make_series(parse_series_id(c.name)), s, ctx);
        BigReal viaL = l_char_real(chi, s, ctx) - BigReal::of(1L, s.prec());
        if (c.sign < 0) viaL = -viaL;
        CHECK(abs(direct - viaL).to_double() <= direct.err() + viaL.err() + 1e-60);
    }
}

TEST_CASE("hurwitz streams sum to the shifted zeta values") {
    BigReal s = at(10.0);
    BigReal direct = series_eval(make_series(parse_series_id("hurwitz_zeta:3/2")), s, ctx);
    BigReal via = hurwitz_zeta_real(s, Rational(3, 2), ctx);
    CHECK(abs(direct - via).to_double() <= direct.err() + via.err() + 1e-60);

    BigReal directl =
        series_eval(make_series(parse_series_id("hurwitz_lambda:3/2")), s, ctx);
    BigReal vial = hurwitz_lambda_real(s, Rational(3, 2), ctx);
    CHECK(abs(directl - vial).to_double() <= directl.err() + vial.err() + 1e-60);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lrec/catalog.hpp"
#include "lrec/expansion_core.hpp"
#include "lrec/fixtures.hpp"
#include "lrec/serialize.hpp"

using namespace lrec;

TEST_CASE("bundled fixtures cover the catalog and are well-formed") {
    const auto& all = bundled_fixtures();
    CHECK(all.size() >= 18);
    for (const auto& f : all) {
        CAPTURE(f.series);
        CHECK((f.source == "paper" || f.source == "oeis"));
        REQUIRE(!f.terms.terms.empty());
        CHECK(f.terms.threshold == f.terms.terms.back().base);
        for (std::size_t i = 1; i < f.terms.terms.size(); ++i)
            CHECK(f.terms.terms[i].base < f.terms.terms[i - 1].base);
        for (const auto& b : f.known_discrepancies) CHECK(b < f.strict_depth);
    }
    CHECK_NOTHROW(fixture_for("zeta_minus_1"));
    CHECK_NOTHROW(fixture_for("zeta_minus_1", "oeis"));
    CHECK_THROWS_AS(fixture_for("no_such_series"), MissingFixture);
}

TEST_CASE("strict fixtures diff clean") {
    for (const char* series : {"zeta_minus_1", "one_minus_eta", "one_minus_beta",
                               "liouville_complement", "chi_6", "chi_m3"}) {
        CAPTURE(series);
        FixtureDiffReport r = fixture_diff(series);
        CHECK(r.classification == "agree");
        CHECK(r.entries.empty());
        CHECK(r.hard_pass);
    }
}

TEST_CASE("typo-candidate fixtures carry only documented diffs") {
    FixtureDiffReport r = fixture_diff("chi_10");
    CHECK(r.classification == "paper-typo-candidate");
    CHECK(r.entries.size() == 11);
    CHECK(r.unexpected.empty());
    CHECK(r.hard_pass);
    const Fixture& f = fixture_for("chi_10");
    for (const auto& d : r.entries) {
        CAPTURE(to_string(d.base));
        CHECK(std::count(f.known_discrepancies.begin(), f.known_discrepancies.end(),
                         d.base) == 1);
    }

    FixtureDiffReport pz = fixture_diff("prime_zeta");
    CHECK(pz.classification == "paper-typo-candidate");
    CHECK(pz.entries.size() == 1);
    CHECK(pz.entries[0].base == Rational(8, 45));
    CHECK(pz.hard_pass);
}

TEST_CASE("indexing-ambiguous fixtures never hard-fail") {
    for (const char* series : {"thue_morse_upsilon", "thue_morse_xi", "chi_m5"}) {
        CAPTURE(series);
        FixtureDiffReport r = fixture_diff(series);
        CHECK(r.hard_pass);
    }
    CHECK(fixture_diff("chi_m5").classification == "indexing-ambiguity");
}

TEST_CASE("sequence crosscheck is hermetic and matches") {
    CrosscheckReport r = oeis_crosscheck();
    CHECK(r.sequence == "A112932");
    CHECK(r.compared >= 30);
    CHECK(r.mismatches.empty());
    CHECK(r.match);
}

TEST_CASE("a corrupted transcription is flagged with positions") {
    // Negative control: perturb one bundled coefficient and diff again.
    Fixture broken = fixture_for("zeta_minus_1", "oeis");
    broken.terms.terms[5].coeff += 1;
    Expansion computed = reciprocal_expansion(
        make_series(parse_series_id("zeta_minus_1")), broken.terms.threshold, 16384);
    auto diffs = diff_expansions(computed, broken.terms);
    REQUIRE(diffs.size() == 1);
    CHECK(diffs[0].base == broken.terms.terms[5].base);
    CHECK(diffs[0].computed == broken.terms.terms[5].coeff - 1);
}

TEST_CASE("fixture and expansion JSON round-trips losslessly") {
    const Fixture& f = fixture_for("dirichlet_lambda_minus_1");
    nlohmann::json j = expansion_json(f.terms);
    CHECK(j.at("terms").front().at("base") == "3/1");
    Expansion back = expansion_from_json(j);
    CHECK(back == f.terms);
    nlohmann::json fj = fixture_json(f);
    CHECK(fj.at("policy") == "typo_candidate");
}

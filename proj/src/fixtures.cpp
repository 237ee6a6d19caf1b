#include "lrec/fixtures.hpp"

#include <algorithm>
#include <sstream>

#include "lrec/catalog.hpp"

namespace lrec {

namespace {

/// Term lists are stored as "c*p/q" tokens, base-descending as printed.
std::vector<PowerTerm> parse_terms(const std::string& text) {
    std::vector<PowerTerm> out;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        const auto star = token.find('*');
        if (star == std::string::npos)
            throw std::invalid_argument("fixture token without '*': " + token);
        PowerTerm t;
        t.coeff = parse_rational(token.substr(0, star));
        t.base = parse_rational(token.substr(star + 1));
        if (!out.empty() && !(t.base < out.back().base))
            throw std::invalid_argument("fixture bases not descending at " + token);
        out.push_back(std::move(t));
    }
    return out;
}

Fixture make_fixture(std::string series, std::string source, FixturePolicy policy,
                     const std::string& terms_text, const char* strict_depth,
                     std::vector<const char*> discrepancies, std::string notes) {
    Fixture f;
    f.series = series;
    f.source = std::move(source);
    f.policy = policy;
    f.terms.source = std::move(series);
    f.terms.terms = parse_terms(terms_text);
    if (f.terms.terms.empty()) throw std::invalid_argument("empty fixture " + f.series);
    f.terms.threshold = f.terms.terms.back().base;
    f.strict_depth = strict_depth ? parse_rational(strict_depth) : f.terms.threshold;
    for (const char* d : discrepancies) f.known_discrepancies.push_back(parse_rational(d));
    f.notes = std::move(notes);
    return f;
}

const char* kZetaTerms =
    "1*2/1 -1*4/3 -1*1/1 1*8/9 -1*4/5 1*2/3 -1*16/27 -1*4/7 2*8/15 -2*4/9 1*2/5 1*32/81 "
    "2*8/21 -1*4/11 -3*16/45 1*8/25 -1*4/13 3*8/27 1*2/7 -3*4/15 -1*64/243 -3*16/63 "
    "2*8/33 4*32/135 -1*4/17 2*8/35 1*2/9 -3*16/75 -1*4/19 2*8/39 -4*16/81 -3*4/21 "
    "1*2/11 7*8/45";

std::vector<Fixture> build_fixtures() {
    std::vector<Fixture> v;

    v.push_back(make_fixture("zeta_minus_1", "paper", FixturePolicy::strict, kZetaTerms,
                             nullptr, {}, "printed term list reproduced in full"));
    v.push_back(make_fixture(
        "zeta_minus_1", "oeis", FixturePolicy::strict, kZetaTerms, nullptr, {},
        "offline transcription of the A112932 expansion data (no network access)"));

    v.push_back(make_fixture(
        "one_minus_eta", "paper", FixturePolicy::strict,
        "1*2/1 1*4/3 -1*1/1 1*8/9 1*4/5 -3*2/3 1*16/27 1*4/7 2*8/15 -4*4/9 -3*2/5 "
        "1*32/81 2*8/21 1*4/11 3*16/45 2*1/3 1*8/25 1*4/13 -5*8/27 -3*2/7 -9*4/15 "
        "1*64/243 3*16/63 2*8/33 4*32/135 1*4/17 2*8/35 5*2/9 3*16/75 1*4/19 2*8/39 "
        "2*1/5 -6*16/81 -9*4/21 -3*2/11 -17*8/45",
        nullptr, {},
        "transcribed through base 8/45; the printed tail below that is out of "
        "descending order in the source and is not part of the fixture"));

    v.push_back(make_fixture("one_minus_beta", "paper", FixturePolicy::strict,
                             "1*3/1 1*9/5 -1*9/7 1*27/25 1*1/1 -1*9/11 -2*27/35 1*9/13 "
                             "1*81/125 1*3/5 1*27/49 1*9/17 -2*27/55 -1*9/19",
                             nullptr, {}, ""));

    v.push_back(make_fixture(
        "dirichlet_lambda_minus_1", "paper", FixturePolicy::typo_candidate,
        "1*3/1 -1*9/5 -1*9/7 1*27/25 -1*1/1 -1*9/11 2*27/35 -1*9/13 -1*81/125 1*3/5 "
        "1*27/49 -1*9/17 2*27/55 -1*9/19 -3*81/175 1*3/7 2*27/65 -1*9/23 1*243/625 "
        "-2*9/25 2*27/77 -2*81/245",
        "27/77", {"81/245"},
        "final printed coefficient -2 at 81/245 disagrees with the computed -3"));

    v.push_back(make_fixture(
        "prime_zeta", "paper", FixturePolicy::typo_candidate,
        "1*2/1 -1*4/3 1*8/9 -1*4/5 -1*16/27 -1*4/7 2*8/15 1*32/81 2*8/21 -1*4/11 "
        "-3*16/45 1*8/25 -1*4/13 -1*64/243 -3*16/63 2*8/33 4*32/135 -1*4/17 2*8/35 "
        "-3*16/75 -1*4/19 2*8/39 1*8/45",
        "8/39", {"8/45"},
        "printed +(8/45) term has computed coefficient 0"));

    v.push_back(make_fixture(
        "mobius_complement", "paper", FixturePolicy::strict,
        "1*2/1 -1*4/3 1*8/9 -1*4/5 1*2/3 -1*16/27 -1*4/7 2*8/15 -2*4/9 1*2/5 1*32/81 "
        "2*8/21 -1*4/11 -3*16/45 1*8/25 -1*4/13 3*8/27 1*2/7 -3*4/15 -1*64/243 -3*16/63 "
        "2*8/33 4*32/135 -1*4/17 2*8/35 1*2/9 -3*16/75 -1*4/19 2*8/39 -4*16/81 -3*4/21 "
        "1*2/11 7*8/45",
        nullptr, {}, "the zeta list without its constant term, as the source states"));

    v.push_back(make_fixture(
        "liouville_complement", "paper", FixturePolicy::strict,
        "1*2/1 -1*4/3 1*1/1 1*8/9 -1*4/5 -1*2/3 -1*16/27 -1*4/7 2*8/15 2*4/9 -1*2/5 "
        "1*32/81 2*8/21 -1*4/11 -3*16/45 1*8/25 -1*4/13 -3*8/27 -1*2/7 3*4/15 -1*64/243 "
        "-3*16/63 2*8/33 4*32/135 -1*4/17 2*8/35 1*2/9 -3*16/75 -1*4/19 2*8/39 4*16/81 "
        "3*4/21 -1*2/11 -7*8/45",
        nullptr, {}, ""));

    v.push_back(make_fixture(
        "thue_morse_upsilon", "paper", FixturePolicy::indexing_ambiguity,
        "1*2/1 -1*4/3 1*1/1 1*8/9 -1*4/5 -1*2/3 -1*16/27 1*4/7 2*8/15 -1*2/5 1*32/81 "
        "-2*8/21 1*4/11 -3*16/45 1*8/25 1*4/13",
        nullptr, {},
        "the source fixes rank indexing only by example; rank 1 = first letter 0 "
        "reproduces this list"));

    v.push_back(make_fixture(
        "thue_morse_xi", "paper", FixturePolicy::indexing_ambiguity,
        "1*2/1 1*4/3 -1*1/1 1*8/9 1*4/5 -3*2/3 1*16/27 -1*4/7 2*8/15 2*1/2", nullptr, {},
        "same indexing caveat as thue_morse_upsilon"));

    v.push_back(make_fixture("chi_m3", "paper", FixturePolicy::strict,
                             "1*2/1 1*1/1 -1*4/5 1*4/7 -1*2/5 -1*4/11 1*8/25 1*4/13 "
                             "1*2/7 -1*4/17 -2*8/35 1*4/19 -1*2/11 -1*4/23 1*8/49 2*4/25",
                             nullptr, {}, ""));

    v.push_back(make_fixture("chi_p3", "paper", FixturePolicy::strict,
                             "1*2/1 -1*1/1 -1*4/5 -1*4/7 1*2/5 -1*4/11 1*8/25 -1*4/13 "
                             "1*2/7 -1*4/17 2*8/35 -1*4/19 1*2/11 -1*4/23 1*8/49 "
                             "-2*4/25 1*2/13 2*8/55",
                             nullptr, {}, ""));

    v.push_back(make_fixture(
        "chi_m5", "paper", FixturePolicy::indexing_ambiguity,
        "1*2/1 -1*4/3 1*1/1 1*8/9 -1*2/3 -1*16/27 -1*4/7 2*4/9 1*32/81 2*8/21 1*4/11 "
        "-1*4/13 3*8/27",
        "4/13", {"8/27"},
        "character read off the printed series; final printed +3 at 8/27 disagrees "
        "with the computed -3"));

    v.push_back(make_fixture(
        "chi_6", "paper", FixturePolicy::strict,
        "1*5/1 -1*25/7 1*125/49 -1*25/11 -1*25/13 -1*625/343 2*125/77 -1*25/17 "
        "2*125/91 -1*25/19 1*3125/2401 -3*625/539 -1*25/23 2*125/119 1*125/121 -1*1/1 "
        "-3*625/637",
        nullptr, {}, ""));

    v.push_back(make_fixture(
        "chi_m6", "paper", FixturePolicy::strict,
        "1*5/1 1*25/7 1*125/49 -1*25/11 1*25/13 1*625/343 -2*125/77 -1*25/17 2*125/91 "
        "1*25/19 1*3125/2401 -3*625/539 -1*25/23 -2*125/119 1*125/121 1*1/1 3*625/637",
        nullptr, {}, ""));

    const std::vector<const char*> chi10_diffs = {"9/61", "9/67", "9/71", "9/73", "9/77",
                                                  "9/79", "9/83", "1/7",  "1/9",  "3/23",
                                                  "3/29"};
    v.push_back(make_fixture(
        "chi_10", "paper", FixturePolicy::typo_candidate,
        "1*3/1 -1*9/7 -1*1/1 -1*9/11 -1*9/13 1*27/49 -1*9/17 -1*9/19 1*3/7 -1*9/23 "
        "2*27/77 -1*9/29 2*27/91 -1*9/31 1*3/11 -1*9/37 -1*81/343 1*3/13 2*27/119 "
        "1*27/121 -1*9/41 -1*9/43 2*27/133 -1*9/47 2*27/143 -2*9/49 1*3/17 -1*9/53 "
        "2*27/161 1*27/169 1*3/19 -1*9/59 -3*81/539 2*27/187 1*1/7 2*27/203 2*3/23 "
        "2*27/209 -3*81/637 2*27/217 2*27/221 -2*9/77 1*1/9 2*27/247 2*27/253 2*27/259 "
        "2*3/29",
        "81/539", chi10_diffs,
        "transcription deviates from the computed expansion below 81/539: several "
        "9/p terms are missing, 1/7 and 1/9 have computed coefficient 0, and the "
        "coefficients at 3/23, 9/77 and 3/29 differ"));

    v.push_back(make_fixture(
        "chi_m10", "paper", FixturePolicy::typo_candidate,
        "1*3/1 -1*9/7 1*1/1 1*9/11 -1*9/13 1*27/49 -1*9/17 1*9/19 -1*3/7 -1*9/23 "
        "-2*27/77 1*9/29 2*27/91 1*9/31 1*3/11 -1*9/37 -1*81/343 -1*3/13 2*27/119 "
        "1*27/121 1*9/41 -1*9/43 -2*27/133 -1*9/47 -2*27/143 2*9/49 -1*3/17 -1*9/53 "
        "2*27/161 1*27/169 1*3/19 1*9/59 3*81/539 -2*27/187 1*1/7 -2*27/203 -2*3/23 "
        "2*27/209 -3*81/637 -2*27/217 2*27/221 -2*9/77 -1*1/9 -2*27/247 -2*27/253 "
        "2*27/259 2*3/29",
        "81/539", chi10_diffs,
        "same deviation pattern as the chi_10 transcription"));

    v.push_back(make_fixture("hurwitz_zeta:3/2", "paper", FixturePolicy::strict,
                             "1*3/2 -1*9/10 -1*9/14", nullptr, {}, ""));

    v.push_back(make_fixture(
        "hurwitz_lambda:3/2", "paper", FixturePolicy::typo_candidate, "1*3/2 -1*9/22",
        "1/1", {"9/14"},
        "printed list omits the -(9/14) term (the second base is b1^2/b2 = 9/14)"));

    return v;
}

}  // namespace

const std::vector<Fixture>& bundled_fixtures() {
    static const std::vector<Fixture> fixtures = build_fixtures();
    return fixtures;
}

const Fixture& fixture_for(const std::string& series, const std::string& source) {
    for (const auto& f : bundled_fixtures())
        if (f.series == series && f.source == source) return f;
    throw MissingFixture(series + " (" + source + ")");
}

FixtureDiffReport fixture_diff(const std::string& series, std::size_t term_cap) {
    const Fixture& f = fixture_for(series);
    SeriesSpec spec = make_series(parse_series_id(series));
    Expansion computed = reciprocal_expansion(spec, f.terms.threshold, term_cap);

    FixtureDiffReport r;
    r.series = series;
    r.source = f.source;
    r.entries = diff_expansions(computed, f.terms);
    for (const auto& d : r.entries) {
        const bool in_strict = !(d.base < f.strict_depth);
        const bool documented =
            std::find(f.known_discrepancies.begin(), f.known_discrepancies.end(), d.base) !=
            f.known_discrepancies.end();
        if (in_strict || !documented) r.unexpected.push_back(d);
    }
    if (r.entries.empty())
        r.classification = "agree";
    else if (f.policy == FixturePolicy::indexing_ambiguity)
        r.classification = "indexing-ambiguity";
    else
        r.classification = "paper-typo-candidate";
    r.hard_pass = f.policy == FixturePolicy::indexing_ambiguity || r.unexpected.empty();
    return r;
}

CrosscheckReport oeis_crosscheck() {
    const Fixture& f = fixture_for("zeta_minus_1", "oeis");
    SeriesSpec spec = make_series(parse_series_id("zeta_minus_1"));
    Expansion computed = reciprocal_expansion(spec, f.terms.threshold, 16384);

    CrosscheckReport r;
    r.sequence = "A112932";
    r.compared = f.terms.terms.size();
    r.mismatches = diff_expansions(computed, f.terms);
    r.match = r.mismatches.empty();
    return r;
}

}  // namespace lrec

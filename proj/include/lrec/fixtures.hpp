#ifndef LREC_FIXTURES_HPP
#define LREC_FIXTURES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrec/expansion.hpp"
#include "lrec/expansion_core.hpp"

namespace lrec {

struct MissingFixture : std::runtime_error {
    explicit MissingFixture(const std::string& series)
        : std::runtime_error("MissingFixture: " + series) {}
};

/// How strictly a transcription binds the computed expansion.
enum class FixturePolicy {
    strict,              // must agree term-by-term (any documented diffs included)
    typo_candidate,      // known transcription defects at listed bases
    indexing_ambiguity,  // source convention not pinned down; diff is informative
};

/// Immutable transcription of a published term list (or the bundled OEIS
/// sequence data). Computed expansions are authoritative; fixtures are
/// reference data with per-fixture strictness.
struct Fixture {
    std::string series;
    std::string source;  // "paper" or "oeis"
    FixturePolicy policy = FixturePolicy::strict;
    Rational strict_depth;                     // bases >= this must match exactly
    std::vector<Rational> known_discrepancies; // documented diff bases below strict_depth
    Expansion terms;                           // threshold = smallest transcribed base
    std::string notes;
};

const std::vector<Fixture>& bundled_fixtures();

/// Throws MissingFixture.
const Fixture& fixture_for(const std::string& series, const std::string& source = "paper");

struct FixtureDiffReport {
    std::string series;
    std::string source;
    std::string classification;  // "agree" | "paper-typo-candidate" | "indexing-ambiguity"
    std::vector<DiffEntry> entries;     // full diff over the transcription's depth
    std::vector<DiffEntry> unexpected;  // diffs in the strict region or undocumented
    bool hard_pass = false;  // true when every diff is below strict_depth and documented
};

/// Recomputes the series down to the fixture's depth and diffs against it.
FixtureDiffReport fixture_diff(const std::string& series, std::size_t term_cap = 16384);

struct CrosscheckReport {
    std::string sequence;
    std::size_t compared = 0;
    std::vector<DiffEntry> mismatches;
    bool match = false;
};

/// Compares the computed zeta reciprocal expansion against the bundled
/// offline sequence fixture (no network access).
CrosscheckReport oeis_crosscheck();

}  // namespace lrec

#endif

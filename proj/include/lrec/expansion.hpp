#ifndef LREC_EXPANSION_HPP
#define LREC_EXPANSION_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lrec/rational.hpp"

namespace lrec {

/// One signed summand c * base^s of an asymptotic expansion.
struct PowerTerm {
    Rational coeff;
    Rational base;  // strictly positive

    bool operator==(const PowerTerm&) const = default;
};

/// Finite, base-descending, merged list of power terms: every term of the true
/// expansion with base >= threshold is present, nothing below it is.
struct Expansion {
    std::string source;   // series identifier
    Rational threshold;   // in (0,1), inclusive keep-rule
    std::vector<PowerTerm> terms;

    /// Coefficient of `base`, zero when absent.
    Rational coeff_at(const Rational& base) const {
        for (const auto& t : terms)
            if (t.base == base) return t.coeff;
        return Rational(0);
    }

    bool operator==(const Expansion&) const = default;
};

/// One term c * base^{-s} of a generalized Dirichlet series.
struct SeriesTerm {
    Rational base;
    Rational coeff;
};

/// Stateful generator; std::nullopt only for genuinely finite streams.
using SeriesStream = std::function<std::optional<SeriesTerm>()>;

/// A generalized Dirichlet series sum c_k * b_k^{-s} with b_1 > 1 and bases
/// strictly increasing without bound. `open` yields a fresh stream per call.
struct SeriesSpec {
    std::string name;
    std::string description;
    std::function<SeriesStream()> open;
};

struct EmptySeries : std::runtime_error {
    EmptySeries() : std::runtime_error("EmptySeries") {}
};
struct ThresholdTooHigh : std::runtime_error {
    ThresholdTooHigh() : std::runtime_error("ThresholdTooHigh") {}
};
struct TermCapExceeded : std::runtime_error {
    TermCapExceeded() : std::runtime_error("TermCapExceeded") {}
};
struct DivergentComposition : std::runtime_error {
    DivergentComposition() : std::runtime_error("DivergentComposition") {}
};
struct DepthCapTooSmall : std::runtime_error {
    DepthCapTooSmall() : std::runtime_error("DepthCapTooSmall") {}
};
struct UnsupportedParameter : std::runtime_error {
    explicit UnsupportedParameter(const std::string& what)
        : std::runtime_error("UnsupportedParameter: " + what) {}
};

/// Materializes the stream prefix with base <= max_base, checking the
/// strictly-ascending invariant.
std::vector<SeriesTerm> take_up_to(const SeriesSpec& spec, const Rational& max_base);

}  // namespace lrec

#endif

#ifndef LREC_VALIDATE_HPP
#define LREC_VALIDATE_HPP

#include <string>

#include "lrec/bigreal.hpp"
#include "lrec/expansion.hpp"

namespace lrec {

/// Numeric check that an expansion really matches 1/F(s) at a remote point:
/// residual = |1/F(s) - sum of expansion terms|, which must stay below
/// 2 * (first omitted base)^s.
struct ValidationReport {
    std::string series;
    Rational threshold;
    Rational first_omitted;  // largest true expansion base below the threshold
    BigReal s;
    BigReal residual;
    BigReal bound;
    bool pass = false;
};

/// F(s) is evaluated by direct summation of the stream; the first omitted
/// base is found by re-expanding below the expansion's threshold.
ValidationReport validate_expansion(const SeriesSpec& spec, const Expansion& e,
                                    const BigReal& s, const PrecisionContext& ctx);

}  // namespace lrec

#endif

#include "lrec/validate.hpp"

#include "lrec/expansion_core.hpp"
#include "lrec/functions.hpp"

namespace lrec {

namespace {

/// Largest true expansion base strictly below the threshold, found by
/// re-expanding with a lower threshold. Halving is retried in case the band
/// (threshold/2, threshold) happens to contain no base.
Rational first_omitted_base(const SeriesSpec& spec, const Rational& threshold) {
    Rational probe = threshold / 2;
    for (int attempt = 0; attempt < 4; ++attempt, probe /= 2) {
        Expansion deeper = reciprocal_expansion(spec, probe, 1 << 14);
        for (const auto& t : deeper.terms)  // terms are base-descending
            if (t.base < threshold) return t.base;
    }
    throw UnsupportedParameter("no omitted term found below threshold " +
                               to_string(threshold));
}

}  // namespace

ValidationReport validate_expansion(const SeriesSpec& spec, const Expansion& e,
                                    const BigReal& s, const PrecisionContext& ctx) {
    const long wp = ctx.bits + ctx.guard_bits;
    ValidationReport r;
    r.series = e.source.empty() ? spec.name : e.source;
    r.threshold = e.threshold;
    r.s = s;
    r.first_omitted = first_omitted_base(spec, e.threshold);

    BigReal f = series_eval(spec, s, ctx);
    BigReal lhs = BigReal::of(1L, wp) / f;
    r.residual = abs(lhs - expansion_eval(e, s, ctx));
    r.bound = BigReal::of(2L, wp) * pow(r.first_omitted, s);
    r.pass = !(r.residual > r.bound);
    return r;
}

}  // namespace lrec

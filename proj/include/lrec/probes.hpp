#ifndef LREC_PROBES_HPP
#define LREC_PROBES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrec/bigreal.hpp"
#include "lrec/rational.hpp"

namespace lrec {

struct UnknownProbe : std::runtime_error {
    explicit UnknownProbe(const std::string& name)
        : std::runtime_error("UnknownProbe: " + name) {}
};

/// One limit-formula evaluation: the bracketed expression at finite input x
/// (exact rational), the independently computed limit value, and their gap.
struct ProbeResult {
    std::string name;
    Rational x;
    std::optional<long> n;
    BigReal value;
    BigReal target;
    BigReal deviation;  // |value - target| at context precision
    std::string expected_order;
};

struct ProbeInfo {
    std::string name;
    bool needs_n = false;
    std::string description;
    std::string expected_order;
};

const std::vector<ProbeInfo>& probe_catalog();

/// Evaluates the named probe. Throws UnknownProbe, OutOfDomain (x outside the
/// probe's sensible range, or missing n), and PrecisionInsufficient when the
/// accumulated error bound is too large to certify the reported deviation.
ProbeResult limit_probe(const std::string& name, const Rational& x, std::optional<long> n,
                        const PrecisionContext& ctx);

}  // namespace lrec

#endif

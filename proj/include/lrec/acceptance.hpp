#ifndef LREC_ACCEPTANCE_HPP
#define LREC_ACCEPTANCE_HPP

#include <string>
#include <vector>

#include "lrec/bigreal.hpp"

namespace lrec {

struct CriterionResult {
    int index = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the nine acceptance criteria in order. Never throws for a failing
/// criterion; failures (including unexpected exceptions) are reported in the
/// result list.
std::vector<CriterionResult> run_acceptance(const PrecisionContext& ctx);

}  // namespace lrec

#endif

#ifndef LREC_SIGN_LAWS_HPP
#define LREC_SIGN_LAWS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrec/expansion.hpp"

namespace lrec {

struct NotReduced : std::runtime_error {
    NotReduced() : std::runtime_error("NotReduced") {}
};

enum class Prediction { minus, plus, unclassified };

inline int prediction_sign(Prediction p) { return p == Prediction::plus ? 1 : -1; }

/// Liouville function for reduced rationals p/q, first kind:
///   +1           if p = 1 and q != 1 (dominates, regardless of Omega values)
///   lambda(q)    if |Omega(p) - Omega(q)| = 1
///   -lambda(q)   if Omega(p) = Omega(q)
///   unclassified otherwise.
Prediction lambda_V(std::uint64_t p, std::uint64_t q);

/// Second kind: +1 on Omega-gap exactly 1, -1 on equal Omega, else unclassified.
Prediction lambda_A(std::uint64_t p, std::uint64_t q);

struct SignVerdict {
    Rational base;
    int actual_sign = 0;        // sign of the term's coefficient
    Prediction predicted = Prediction::unclassified;
    // matches is three-valued: not applicable exactly when unclassified.
    enum class Match { yes, no, not_applicable } matches = Match::not_applicable;
};

struct AuditReport {
    std::string series;
    std::string law;  // "V", "A" or "residue"
    std::vector<SignVerdict> verdicts;
    std::size_t matched = 0;
    std::size_t mismatched = 0;
    std::size_t unclassified = 0;
};

enum class SignLaw { V, A };

/// Runs the chosen rational-Liouville law over every term of the expansion.
AuditReport audit_signs(const Expansion& expansion, SignLaw law);

/// Groups terms by denominator residue mod `modulus`; predicted sign per class
/// is the majority sign, mismatches are the minority terms. Also used to probe
/// whether each residue class carries a constant sign.
AuditReport residue_sign_report(const Expansion& expansion, unsigned modulus);

}  // namespace lrec

#endif

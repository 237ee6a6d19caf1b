#include "lrec/sign_laws.hpp"

#include <map>
#include <numeric>

#include "lrec/number_theory.hpp"

namespace lrec {

namespace {

void check_reduced(std::uint64_t p, std::uint64_t q) {
    if (p == 0 || q == 0 || std::gcd(p, q) != 1) throw NotReduced();
}

int omega_gap(std::uint64_t p, std::uint64_t q) {
    return static_cast<int>(big_omega(p)) - static_cast<int>(big_omega(q));
}

}  // namespace

Prediction lambda_V(std::uint64_t p, std::uint64_t q) {
    check_reduced(p, q);
    if (p == 1 && q != 1) return Prediction::plus;  // dominates the Omega clauses
    const int gap = omega_gap(p, q);
    if (gap == 1 || gap == -1)
        return liouville(q) > 0 ? Prediction::plus : Prediction::minus;
    if (gap == 0)  // covers p = q = 1: -lambda(1) = -1
        return liouville(q) > 0 ? Prediction::minus : Prediction::plus;
    return Prediction::unclassified;
}

Prediction lambda_A(std::uint64_t p, std::uint64_t q) {
    check_reduced(p, q);
    const int gap = omega_gap(p, q);
    if (gap == 1 || gap == -1) return Prediction::plus;
    if (gap == 0) return Prediction::minus;
    return Prediction::unclassified;
}

namespace {

SignVerdict make_verdict(const PowerTerm& t, Prediction predicted) {
    SignVerdict v;
    v.base = t.base;
    v.actual_sign = t.coeff > 0 ? 1 : -1;
    v.predicted = predicted;
    v.matches = predicted == Prediction::unclassified
                    ? SignVerdict::Match::not_applicable
                    : (prediction_sign(predicted) == v.actual_sign ? SignVerdict::Match::yes
                                                                   : SignVerdict::Match::no);
    return v;
}

void count(AuditReport& r) {
    for (const auto& v : r.verdicts) switch (v.matches) {
            case SignVerdict::Match::yes: ++r.matched; break;
            case SignVerdict::Match::no: ++r.mismatched; break;
            case SignVerdict::Match::not_applicable: ++r.unclassified; break;
        }
}

}  // namespace

AuditReport audit_signs(const Expansion& expansion, SignLaw law) {
    if (expansion.terms.empty())
        throw UnsupportedParameter("audit_signs needs a nonempty expansion");
    AuditReport r;
    r.series = expansion.source;
    r.law = law == SignLaw::V ? "V" : "A";
    for (const auto& t : expansion.terms) {
        const auto p = t.base.get_num().get_ui();
        const auto q = t.base.get_den().get_ui();
        r.verdicts.push_back(
            make_verdict(t, law == SignLaw::V ? lambda_V(p, q) : lambda_A(p, q)));
    }
    count(r);
    return r;
}

AuditReport residue_sign_report(const Expansion& expansion, unsigned modulus) {
    if (modulus < 2) throw UnsupportedParameter("modulus must be at least 2");
    // Majority sign per denominator residue class.
    std::map<unsigned, int> balance;
    for (const auto& t : expansion.terms) {
        const unsigned r = static_cast<unsigned>(t.base.get_den().get_ui() % modulus);
        balance[r] += t.coeff > 0 ? 1 : -1;
    }
    AuditReport report;
    report.series = expansion.source;
    report.law = "residue";
    for (const auto& t : expansion.terms) {
        const unsigned r = static_cast<unsigned>(t.base.get_den().get_ui() % modulus);
        const int b = balance[r];
        Prediction predicted = b == 0 ? Prediction::unclassified
                               : b > 0 ? Prediction::plus
                                       : Prediction::minus;
        report.verdicts.push_back(make_verdict(t, predicted));
    }
    count(report);
    return report;
}

}  // namespace lrec

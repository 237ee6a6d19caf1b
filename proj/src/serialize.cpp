#include "lrec/serialize.hpp"

namespace lrec {

using nlohmann::json;

namespace {

json frac(const Rational& r) { return to_fraction_string(r); }

json real(const BigReal& v) { return v.str(0); }

std::string match_string(SignVerdict::Match m) {
    switch (m) {
        case SignVerdict::Match::yes: return "yes";
        case SignVerdict::Match::no: return "no";
        default: return "not_applicable";
    }
}

std::string prediction_string(Prediction p) {
    switch (p) {
        case Prediction::plus: return "+1";
        case Prediction::minus: return "-1";
        default: return "unclassified";
    }
}

json diff_entries_json(const std::vector<DiffEntry>& entries) {
    json a = json::array();
    for (const auto& e : entries)
        a.push_back({{"base", frac(e.base)},
                     {"computed", frac(e.computed)},
                     {"reference", frac(e.reference)}});
    return a;
}

}  // namespace

json expansion_json(const Expansion& e) {
    json terms = json::array();
    for (const auto& t : e.terms)
        terms.push_back({{"base", frac(t.base)}, {"coeff", frac(t.coeff)}});
    return {{"series", e.source}, {"threshold", frac(e.threshold)}, {"terms", terms}};
}

Expansion expansion_from_json(const json& j) {
    Expansion e;
    e.source = j.at("series").get<std::string>();
    e.threshold = parse_rational(j.at("threshold").get<std::string>());
    for (const auto& t : j.at("terms"))
        e.terms.push_back({parse_rational(t.at("coeff").get<std::string>()),
                           parse_rational(t.at("base").get<std::string>())});
    return e;
}

json catalog_json(const std::vector<CatalogEntry>& entries) {
    json a = json::array();
    for (const auto& c : entries)
        a.push_back({{"name", c.name},
                     {"description", c.description},
                     {"leading_base", frac(c.leading_base)},
                     {"orientation", c.orientation}});
    return a;
}

json audit_json(const AuditReport& r) {
    json verdicts = json::array();
    for (const auto& v : r.verdicts)
        verdicts.push_back({{"base", frac(v.base)},
                            {"actual_sign", v.actual_sign},
                            {"predicted", prediction_string(v.predicted)},
                            {"matches", match_string(v.matches)}});
    return {{"series", r.series},
            {"law", r.law},
            {"matched", r.matched},
            {"mismatched", r.mismatched},
            {"unclassified", r.unclassified},
            {"verdicts", verdicts}};
}

json probe_json(const ProbeResult& r) {
    return {{"name", r.name},
            {"x", frac(r.x)},
            {"n", r.n ? json(*r.n) : json(nullptr)},
            {"value", real(r.value)},
            {"target", real(r.target)},
            {"deviation", real(r.deviation)},
            {"expected_order", r.expected_order}};
}

json validation_json(const ValidationReport& r) {
    return {{"series", r.series},
            {"threshold", frac(r.threshold)},
            {"first_omitted", frac(r.first_omitted)},
            {"s", real(r.s)},
            {"residual", real(r.residual)},
            {"bound", real(r.bound)},
            {"pass", r.pass}};
}

json fixture_json(const Fixture& f) {
    json kd = json::array();
    for (const auto& b : f.known_discrepancies) kd.push_back(frac(b));
    const char* policy = f.policy == FixturePolicy::strict          ? "strict"
                         : f.policy == FixturePolicy::typo_candidate ? "typo_candidate"
                                                                     : "indexing_ambiguity";
    return {{"series", f.series},
            {"source", f.source},
            {"policy", policy},
            {"strict_depth", frac(f.strict_depth)},
            {"known_discrepancies", kd},
            {"notes", f.notes},
            {"expansion", expansion_json(f.terms)}};
}

json fixture_diff_json(const FixtureDiffReport& r) {
    return {{"series", r.series},
            {"source", r.source},
            {"classification", r.classification},
            {"entries", diff_entries_json(r.entries)},
            {"unexpected", diff_entries_json(r.unexpected)},
            {"hard_pass", r.hard_pass}};
}

json crosscheck_json(const CrosscheckReport& r) {
    return {{"sequence", r.sequence},
            {"compared", r.compared},
            {"mismatches", diff_entries_json(r.mismatches)},
            {"match", r.match}};
}

json acceptance_json(const std::vector<CriterionResult>& results) {
    json a = json::array();
    for (const auto& c : results)
        a.push_back({{"index", c.index},
                     {"title", c.title},
                     {"pass", c.pass},
                     {"detail", c.detail},
                     {"seconds", c.seconds}});
    bool all = true;
    for (const auto& c : results) all = all && c.pass;
    return {{"criteria", a}, {"all_pass", all}};
}

}  // namespace lrec

#ifndef LREC_SERIALIZE_HPP
#define LREC_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "lrec/acceptance.hpp"
#include "lrec/catalog.hpp"
#include "lrec/expansion.hpp"
#include "lrec/fixtures.hpp"
#include "lrec/probes.hpp"
#include "lrec/sign_laws.hpp"
#include "lrec/validate.hpp"

namespace lrec {

/// JSON views of the report types. All fractions render as "p/q" with an
/// explicit denominator; arbitrary-precision reals render as full-precision
/// decimal strings so round-trips stay lossless.
nlohmann::json expansion_json(const Expansion& e);
Expansion expansion_from_json(const nlohmann::json& j);

nlohmann::json catalog_json(const std::vector<CatalogEntry>& entries);
nlohmann::json audit_json(const AuditReport& r);
nlohmann::json probe_json(const ProbeResult& r);
nlohmann::json validation_json(const ValidationReport& r);
nlohmann::json fixture_json(const Fixture& f);
nlohmann::json fixture_diff_json(const FixtureDiffReport& r);
nlohmann::json crosscheck_json(const CrosscheckReport& r);
nlohmann::json acceptance_json(const std::vector<CriterionResult>& results);

}  // namespace lrec

#endif

#pragma once

#include <string>

#include <gmpxx.h>
#include <json.hpp>

#include "wpslab/families.hpp"
#include "wpslab/polyseq.hpp"
#include "wpslab/quasismooth.hpp"
#include "wpslab/search.hpp"
#include "wpslab/weight_system.hpp"

namespace wpslab {

/// JSON conventions: big integers are decimal strings, rationals are
/// {"num", "den"} in lowest terms with positive denominator. The only
/// floating-point members anywhere are the "*_decimal" convenience fields,
/// each next to an explicit precision field.
nlohmann::json json_of(const mpz_class& v);
nlohmann::json json_of(const mpq_class& v);
nlohmann::json json_of(const WeightSystem& w);
nlohmann::json json_of(const Hypersurface& h);
nlohmann::json json_of(const SubsetRecord& rec);
nlohmann::json json_of(const CycleStep& step);
nlohmann::json json_of(const QuasiSmoothCertificate& cert);
nlohmann::json json_of(const FamilyMember& member);
nlohmann::json json_of(const FamilyCertificate& cert);
nlohmann::json json_of(const SearchHit& hit, SearchObjective objective);
nlohmann::json json_of(const SearchCounters& counters);
nlohmann::json json_of(const IdentityCheck& check);

/// Envelope: {"schema_version": "wpslab/1", "command", "inputs", "results",
/// "timing": {"wall_ms": integer}}.
nlohmann::json make_document(std::string command, nlohmann::json inputs,
                             nlohmann::json results, long long wall_ms);

/// Strict parse of a serialized document: exactly the five envelope fields,
/// schema_version "wpslab/1"; anything else throws std::runtime_error.
nlohmann::json parse_document(const std::string& text);

}  // namespace wpslab

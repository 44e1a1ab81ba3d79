#ifndef ETA_SERIALIZE_HPP
#define ETA_SERIALIZE_HPP

#include <json.hpp>

#include "eta/eta_engine.hpp"

namespace eta {

// Key order is insertion order so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

/// Every rational is a canonical "p/q" string.
Json to_json(const EtaCoefficient& e);
Json to_json(const VerificationReport& r, bool include_coefficients);
Json to_json(const ReferenceTables& t);

/// Inverse of to_json(ReferenceTables): {"c": {"2": "-1/6", ...}, "zeta": {...}}.
/// Throws InvalidInput on a malformed document.
ReferenceTables reference_tables_from_json(const Json& doc);

}  // namespace eta

#endif  // ETA_SERIALIZE_HPP

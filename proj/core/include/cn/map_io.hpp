#pragma once

// JSON map files:
//   { "n": 3, "domain": "interval" | "circle",
//     "vertices": [["0", "1/2"], ...],
//     "arcs": [{"from": 0, "to": 1, "weight": 2, "lift": 0, "name": "diag"}, ...] }
// Rationals are "p/q" strings (plain integers are accepted on input).
// "weight", "lift" and "name" are optional; other top-level keys are ignored.

#include <filesystem>

#include <nlohmann/json.hpp>

#include "cn/conversions.hpp"
#include "cn/plmultimap.hpp"
#include "cn/weights.hpp"

namespace cn {

using Json = nlohmann::json;

Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& r);

// Throws StructuralError on any schema problem.
PLMultimap map_from_json(const Json& j);
Json map_to_json(const PLMultimap& f);

// Throws StructuralError if the file cannot be read or parsed.
PLMultimap load_map(const std::filesystem::path& path);

Json nfold_to_json(const NFoldMap& g);
Json sp_to_json(const SPMap& g);
Json profile_to_json(const CardinalityProfile& p);
Json validation_to_json(const PLMultimap& f, const ValidationReport& r);
Json certificate_to_json(const BalanceSystem& sys, const WeightCertificate& cert);

}  // namespace cn

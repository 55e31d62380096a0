#pragma once

#include <json.hpp>

#include "pqcalc/integration.hpp"
#include "pqcalc/taylor.hpp"

namespace pq {

/// {"a": "<rat>", "orientation": "x-a"|"a-x", "coeffs": ["<rat>", ...]}
nlohmann::json to_json(const PowerBasisExpansion& e);
PowerBasisExpansion expansion_from_json(const nlohmann::json& j);

/// {"value": float, "terms": int, "tail": float, "status": "converged"|"max_terms"|"divergent",
///  "regime": "lt1"|"gt1"}
nlohmann::json to_json(const IntegralResult& r);
IntegralResult integral_result_from_json(const nlohmann::json& j);

}  // namespace pq

#pragma once

#include <json.hpp>

#include "extset/claims.hpp"
#include "extset/search.hpp"

namespace extset {

/// {"n", "k", "t", "s", "constraints": [...], "objective", "budget"}.
/// Constraint names: intersecting, non_trivial, matching_at_most, pair_mode.
/// Throws ParameterError on malformed input.
SearchProblem problem_from_json(const nlohmann::json& j);
nlohmann::json problem_to_json(const SearchProblem& problem);

nlohmann::json result_to_json(const SearchResult& result);

nlohmann::json family_to_json(const Family& fam);

nlohmann::json claim_record_to_json(const exact::ClaimRecord& record);

nlohmann::json threshold_to_json(const exact::ThresholdResult& result);

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace extset

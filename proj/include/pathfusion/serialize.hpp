// JSON forms of the library's wire formats: fusion terms, irreducible sets,
// pair files, validation diagnostics, verification and property reports.

#pragma once

#include <json.hpp>

#include "pathfusion/verify.hpp"

namespace pathfusion {

nlohmann::json to_json(const FusionTerms& terms);
nlohmann::json to_json(const IrrSet& set);
nlohmann::json to_json(const ValidationResult& result);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const PropertyReport& report);

/// {"rank": n, "gamma": [words], "transversal": [words]}
nlohmann::json pair_to_json(const PairSpec& pair);
PairSpec pair_from_json(const nlohmann::json& j, bool augment_unit = false);
PairSpec load_pair_file(const std::string& path, bool augment_unit = false);

}  // namespace pathfusion

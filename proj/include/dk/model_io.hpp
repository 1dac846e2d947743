#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "dk/choice.hpp"
#include "dk/model.hpp"

namespace dk {

using ParsedModel = std::variant<OptionSetAssessment, GambleAssessment, CredalSet>;

// Parses the JSON model schema: {"space": [...], "ordering": "nonneg"|"strict",
// and exactly one of "assessment" | "desirable" | "credal"}.
// Errors carry a path into the document.
ParsedModel parse_model(const std::string& text);

// Canonical serialization; parse . serialize . parse is the identity.
nlohmann::json to_json(const ParsedModel& model);

nlohmann::json gamble_to_json(const Gamble& g);
nlohmann::json option_set_to_json(const OptionSet& s);
Gamble gamble_from_json(const nlohmann::json& j, const SpaceSpec& space,
                        const std::string& path);
OptionSet option_set_from_json(const nlohmann::json& j, const SpaceSpec& space,
                               const std::string& path);

nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j, const SpaceSpec& space,
                                  BackgroundOrdering ordering);

}  // namespace dk

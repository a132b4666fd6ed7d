#pragma once

#include <json.hpp>

#include "singwords/classify.hpp"
#include "singwords/extremal.hpp"
#include "singwords/h_conditions.hpp"
#include "singwords/streams.hpp"

// All CLI-facing JSON carries a stable schema_version field; big integers
// serialize as decimal strings.
namespace singwords {

inline constexpr int kJsonSchemaVersion = 1;

nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const ExtremalResult& r);
nlohmann::json to_json(const MarkoffResult& r);
nlohmann::json to_json(const WindowVerdict& v);
nlohmann::json to_json(const HReport& r);
nlohmann::json to_json(const ConjectureReport& r);

nlohmann::json json_envelope(const std::string& command);

} // namespace singwords

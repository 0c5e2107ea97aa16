#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "clocksim/missions.hpp"
#include "clocksim/science.hpp"

namespace clocksim::config {

inline constexpr const char* version = "1.0.0";

// Parsed mission configuration. Only the struct matching `mission` is
// meaningful; `merged` keeps the fully resolved JSON for hashing/manifests.
struct MissionConfig {
  std::string mission;
  missions::AcesMission aces;
  missions::SagasMission sagas;
  nlohmann::json merged;
};

// Baseline configuration tree for a mission tag ("aces" or "sagas"),
// serialized from the built-in defaults.
nlohmann::json default_config(const std::string& mission);

// Parse a JSON config file; parse failures carry the parser's byte/line
// diagnostic.
nlohmann::json load_json(const std::string& path);

// Recursive merge: overlay objects merge key-by-key, everything else
// replaces the base value.
nlohmann::json merge(const nlohmann::json& base, const nlohmann::json& overlay);

// Apply a dotted-path override of the form "clocks.pharao.white_fm=2e-13".
// The value is parsed as JSON when possible, else taken as a string.
void apply_override(nlohmann::json& tree, const std::string& assignment);

// Resolve defaults + file + overrides into mission structs, with
// field-path diagnostics on type or domain errors.
MissionConfig make_mission_config(const nlohmann::json& merged);

// FNV-1a 64-bit hash of the canonical dump.
uint64_t config_hash(const nlohmann::json& tree);

// Run manifest: config hash, command, seed, versions. No timestamps, so
// reruns are byte-identical.
nlohmann::json manifest(const nlohmann::json& cfg, const std::string& command,
                        std::optional<uint64_t> seed);

nlohmann::json result_to_json(const science::EstimationResult& result);

nlohmann::json mc_summary_to_json(const science::MonteCarloSummary& summary);

// Minimal JSON-schema check (type/required/properties/items/enum); throws
// with the offending path on mismatch.
void validate_json(const nlohmann::json& value, const nlohmann::json& schema);

std::string format_double(double v);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

void write_csv_numeric(const std::string& path, const std::vector<std::string>& header,
                       const std::vector<std::vector<double>>& rows);

void write_text(const std::string& path, const std::string& content);

}  // namespace clocksim::config

#pragma once

#include "pubsim/model.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace pubsim {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Missing or unreadable config file.
struct ConfigFileError : ConfigError {
    using ConfigError::ConfigError;
};

/// Malformed JSON (message carries the parser's position context).
struct ConfigParseError : ConfigError {
    using ConfigError::ConfigError;
};

/// A key the schema does not define; simulation studies die by silent
/// typos, so unknown keys are fatal rather than ignored.
struct ConfigKeyError : ConfigError {
    using ConfigError::ConfigError;
};

/// The parsed config violates model invariants; all violations listed.
struct ConfigValidationError : ConfigError {
    explicit ConfigValidationError(std::vector<std::string> violations_in);
    std::vector<std::string> violations;
};

/// Load a scenario from a UTF-8 JSON file. Absent keys keep their
/// baseline defaults; the result must pass validate_config.
ScenarioConfig parse_config(const std::string& path);

/// Same parse applied to an already-loaded document.
ScenarioConfig parse_config_json(const nlohmann::json& doc);

/// Full round-trippable snapshot of a config.
nlohmann::json config_to_json(const ScenarioConfig& config);

} // namespace pubsim

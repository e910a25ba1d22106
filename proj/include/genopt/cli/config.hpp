#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "genopt/blockopt.hpp"
#include "genopt/engine.hpp"
#include "genopt/localsearch.hpp"

namespace genopt::cli {

/// Invalid configuration; the message names the offending key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything one CLI invocation reads from its configuration file.
struct ExperimentConfig {
  RunConfig run;
  /// Cycle tolerance and cycle cap for `blockopt`; blocks come from the command line.
  BlockPartition blockopt;
  /// Local search used by `compare`.
  PatternConfig pattern;
};

/// Strict parse: unknown keys and ill-typed values raise ConfigError. Absent keys
/// take their documented defaults. The result is validated as a whole.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig parse_config_text(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Effective configuration with every default spelled out; parses back to the same value.
nlohmann::json to_json(const ExperimentConfig& cfg);

/// Throws ConfigError if the run configuration or its landscape is inconsistent.
void validate(const ExperimentConfig& cfg);

}  // namespace genopt::cli

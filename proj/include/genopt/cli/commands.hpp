#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "genopt/blockopt.hpp"
#include "genopt/cli/config.hpp"
#include "genopt/cli/io.hpp"
#include "genopt/engine.hpp"

namespace genopt::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kRuntimeError = 2 };

struct CommandOptions {
  std::filesystem::path config;
  std::filesystem::path out = ".";
  std::optional<std::uint64_t> seed;
  std::size_t starts = 100;
  std::optional<std::string> blocks;
};

/// Loads the configuration and applies the --seed override.
ExperimentConfig load_for(const CommandOptions& opts);

struct RunOutput {
  RunTrace trace;
  std::vector<Snapshot> snapshots;
  std::vector<Well> final_wells;
};

/// GA run recording populations at generations 0, G/4, G/2, 3G/4, G and the last one.
RunOutput run_experiment(const ExperimentConfig& cfg);

/// Paired trials: trial i uses seed + i for one GA run and one pattern-search start.
/// Throws ConfigError when the landscape has no known global optimum or k > 1.
std::vector<CompareRow> compare_experiment(const ExperimentConfig& cfg, std::size_t starts);

/// Multi-objective run; returns the final archive sorted by first objective.
/// Throws ConfigError when k < 2.
std::vector<FrontMember> front_experiment(const ExperimentConfig& cfg);

BlockResult blockopt_experiment(const ExperimentConfig& cfg, const BlockPartition& partition);

/// Command bodies: write their files under opts.out and return an exit code.
/// `log` receives progress notes and error messages.
int cmd_run(const CommandOptions& opts, std::ostream& log);
int cmd_compare(const CommandOptions& opts, std::ostream& log);
int cmd_front(const CommandOptions& opts, std::ostream& log);
int cmd_blockopt(const CommandOptions& opts, std::ostream& log);

/// Dispatches by subcommand name ("run", "compare", "front", "blockopt").
int execute(const std::string& command, const CommandOptions& opts, std::ostream& log);

}  // namespace genopt::cli

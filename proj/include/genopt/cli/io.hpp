#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "genopt/blockopt.hpp"
#include "genopt/engine.hpp"
#include "genopt/landscapes.hpp"
#include "genopt/pareto.hpp"

namespace genopt::cli {

/// Nine significant digits, "%.9g".
std::string format_number(double value);

/// Writes `content` to a sibling temporary file, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// trace.csv: generation, best_cost, mean_cost, median_cost, best_x_0.., diversity,
/// evaluations, then niche_0.. when `wells` > 0.
std::string trace_csv(const RunTrace& trace, std::size_t params, std::size_t wells);

/// Inverse of `trace_csv`; column counts come from the header. Throws std::runtime_error.
RunTrace parse_trace_csv(const std::string& text);

struct CompareRow {
  std::uint64_t seed = 0;
  double ga_best = 0.0;
  bool ga_in_global_basin = false;
  double ps_best = 0.0;
  bool ps_in_global_basin = false;
};

/// Rows, then a `success_rate` footer (nan when there are no rows).
std::string compare_csv(const std::vector<CompareRow>& rows);

/// Decoded parameters x_0.. then objectives f_0.., one row per member.
std::string front_csv(const std::vector<FrontMember>& members);

std::string blocks_csv(const std::vector<BlockStep>& history);

struct Snapshot {
  int generation = 0;
  Eigen::MatrixXd points;
};

/// Scatter of decoded 2-parameter populations, light to dark with generation, plus
/// well centers as crosses.
std::string population_svg(const std::vector<Snapshot>& snapshots, const GenomeSpec& genome,
                           const std::vector<Well>& wells);

/// Objective-space scatter (first two objectives).
std::string front_svg(const std::vector<FrontMember>& members);

}  // namespace genopt::cli

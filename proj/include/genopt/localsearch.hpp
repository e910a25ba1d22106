#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "genopt/landscapes.hpp"

namespace genopt {

/// Compass search settings. Steps are fractions of each parameter's range.
struct PatternConfig {
  double initial_step = 0.1;
  double shrink = 0.5;
  double min_step = 1e-6;
  long long max_evals = 100000;

  void validate() const;
};

struct PatternResult {
  Eigen::VectorXd x;
  double cost = 0.0;
  long long evaluations = 0;
  /// Incumbent cost after the start and after every accepted move.
  std::vector<double> history;
};

/// Deterministic compass search on the first objective at generation `t`.
///
/// Polls +step, -step along axis 0, then axis 1, ... (clipped to the box) and moves
/// to the first strict improvement, restarting the poll from axis 0. A full failed
/// poll multiplies the step by `shrink`; the search ends once the step falls below
/// `min_step` or the evaluation budget is spent. Throws DomainError when x0 lies
/// outside the box.
PatternResult pattern_search(const Landscape& landscape, const Eigen::VectorXd& lower,
                             const Eigen::VectorXd& upper, const Eigen::VectorXd& x0,
                             const PatternConfig& cfg = {}, int t = 0,
                             std::uint64_t eval_seed = 0);

}  // namespace genopt

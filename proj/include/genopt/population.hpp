#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "genopt/genome.hpp"

namespace genopt {

struct Individual {
  Chromosome chromosome;
  /// Objective values (length k); empty until evaluated.
  Eigen::VectorXd cost;
  int born_at = 0;

  bool evaluated() const { return cost.size() > 0; }
  /// First objective; throws StateError when unevaluated.
  double scalar_cost() const;
};

struct Population {
  std::vector<Individual> members;
  int generation = 0;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }

  /// Throws StateError if any member is unevaluated.
  void require_evaluated() const;
  /// First-objective costs, in member order.
  std::vector<double> scalar_costs() const;
  /// Decoded points, one row per member.
  Eigen::MatrixXd decoded(const GenomeSpec& spec) const;
};

}  // namespace genopt

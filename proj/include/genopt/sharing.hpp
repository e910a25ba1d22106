#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "genopt/genome.hpp"
#include "genopt/landscapes.hpp"
#include "genopt/population.hpp"

namespace genopt {

struct SharingConfig {
  bool enabled = false;
  /// Sharing radius, as a distance between points mapped onto the unit cube.
  double sigma = 0.15;
  double alpha = 1.0;
  /// Cost added per unit of crowding beyond the individual itself.
  double beta = 0.2;

  void validate() const;
};

/// sh(d) = 1 - (d / sigma)^alpha for d < sigma, else 0.
double sharing_kernel(double distance, double sigma, double alpha);

/// Niche counts m_i = sum_j sh(d_ij) over the rows of `points` (already normalized).
Eigen::VectorXd niche_counts(const Eigen::Ref<const Eigen::MatrixXd>& points, double sigma,
                             double alpha);

/// cost_i + beta (m_i - 1).
Eigen::VectorXd shared_cost(std::span<const double> costs,
                            const Eigen::Ref<const Eigen::MatrixXd>& normalized_points,
                            const SharingConfig& cfg);

/// Population form; throws StateError on an unevaluated member.
Eigen::VectorXd shared_cost(const Population& pop, const GenomeSpec& genome,
                            const SharingConfig& cfg);

/// Occupants per well: each point counts toward its nearest center (ties to the lower index).
struct NicheReport {
  std::vector<std::size_t> counts;
};

/// Throws DomainError on an empty well list.
NicheReport niche_report(const Eigen::Ref<const Eigen::MatrixXd>& points,
                         std::span<const Well> wells);
NicheReport niche_report(const Population& pop, const GenomeSpec& genome,
                         std::span<const Well> wells);

/// Mean pairwise Euclidean distance between rows; 0 for fewer than two rows.
double mean_pairwise_distance(const Eigen::Ref<const Eigen::MatrixXd>& points);

/// Rows of `points` mapped onto the unit cube of `genome`'s box.
Eigen::MatrixXd normalize_rows(const GenomeSpec& genome,
                               const Eigen::Ref<const Eigen::MatrixXd>& points);

}  // namespace genopt

#include "genopt/sharing.hpp"

#include <cmath>

#include "genopt/errors.hpp"

namespace genopt {

void SharingConfig::validate() const {
  if (!(sigma > 0.0)) throw DomainError("sharing: sigma must be positive");
  if (!(alpha > 0.0)) throw DomainError("sharing: alpha must be positive");
  if (!(beta >= 0.0)) throw DomainError("sharing: beta must be non-negative");
}

double sharing_kernel(double distance, double sigma, double alpha) {
  if (distance >= sigma) return 0.0;
  return 1.0 - std::pow(distance / sigma, alpha);
}

namespace {

double row_distance(const Eigen::Ref<const Eigen::MatrixXd>& points, Eigen::Index i,
                    Eigen::Index j) {
  double sum = 0.0;
  for (Eigen::Index c = 0; c < points.cols(); ++c) {
    const double d = points(i, c) - points(j, c);
    sum += d * d;
  }
  return std::sqrt(sum);
}

}  // namespace

// m_i sums the kernel over every j in index order, self included, so the result
// is reproducible term by term from the definition.
Eigen::VectorXd niche_counts(const Eigen::Ref<const Eigen::MatrixXd>& points, double sigma,
                             double alpha) {
  const auto n = points.rows();
  Eigen::VectorXd m(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < n; ++j)
      sum += sharing_kernel(row_distance(points, i, j), sigma, alpha);
    m[i] = sum;
  }
  return m;
}

Eigen::VectorXd shared_cost(std::span<const double> costs,
                            const Eigen::Ref<const Eigen::MatrixXd>& normalized_points,
                            const SharingConfig& cfg) {
  if (static_cast<Eigen::Index>(costs.size()) != normalized_points.rows())
    throw StructuralError("sharing: cost and point counts differ");
  const Eigen::VectorXd m = niche_counts(normalized_points, cfg.sigma, cfg.alpha);
  const Eigen::Map<const Eigen::VectorXd> raw(costs.data(), static_cast<Eigen::Index>(costs.size()));
  return raw + cfg.beta * (m.array() - 1.0).matrix();
}

Eigen::VectorXd shared_cost(const Population& pop, const GenomeSpec& genome,
                            const SharingConfig& cfg) {
  pop.require_evaluated();
  const auto costs = pop.scalar_costs();
  return shared_cost(costs, normalize_rows(genome, pop.decoded(genome)), cfg);
}

NicheReport niche_report(const Eigen::Ref<const Eigen::MatrixXd>& points,
                         std::span<const Well> wells) {
  if (wells.empty()) throw DomainError("niche report: empty well list");
  NicheReport report{std::vector<std::size_t>(wells.size(), 0)};
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    std::size_t nearest = 0;
    double best = (points.row(i).transpose() - wells[0].center).squaredNorm();
    for (std::size_t w = 1; w < wells.size(); ++w) {
      const double d = (points.row(i).transpose() - wells[w].center).squaredNorm();
      if (d < best) {
        best = d;
        nearest = w;
      }
    }
    ++report.counts[nearest];
  }
  return report;
}

NicheReport niche_report(const Population& pop, const GenomeSpec& genome,
                         std::span<const Well> wells) {
  return niche_report(pop.decoded(genome), wells);
}

double mean_pairwise_distance(const Eigen::Ref<const Eigen::MatrixXd>& points) {
  const auto n = points.rows();
  if (n < 2) return 0.0;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) sum += (points.row(i) - points.row(j)).norm();
  return sum / (0.5 * static_cast<double>(n) * static_cast<double>(n - 1));
}

Eigen::MatrixXd normalize_rows(const GenomeSpec& genome,
                               const Eigen::Ref<const Eigen::MatrixXd>& points) {
  const Eigen::RowVectorXd lo = genome.lower().transpose();
  const Eigen::RowVectorXd inv = genome.range().cwiseInverse().transpose();
  return (points.rowwise() - lo).array().rowwise() * inv.array();
}

}  // namespace genopt

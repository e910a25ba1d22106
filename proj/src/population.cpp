#include "genopt/population.hpp"

#include "genopt/errors.hpp"

namespace genopt {

double Individual::scalar_cost() const {
  if (!evaluated()) throw StateError("individual is not evaluated");
  return cost[0];
}

void Population::require_evaluated() const {
  for (const auto& m : members)
    if (!m.evaluated()) throw StateError("population holds an unevaluated individual");
}

std::vector<double> Population::scalar_costs() const {
  std::vector<double> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.scalar_cost());
  return out;
}

Eigen::MatrixXd Population::decoded(const GenomeSpec& spec) const {
  Eigen::MatrixXd points(static_cast<Eigen::Index>(members.size()),
                         static_cast<Eigen::Index>(spec.size()));
  for (std::size_t i = 0; i < members.size(); ++i)
    points.row(static_cast<Eigen::Index>(i)) = decode(spec, members[i].chromosome).transpose();
  return points;
}

}  // namespace genopt

#include "genopt/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace genopt {

Fronts nondominated_sort(const Eigen::Ref<const Eigen::MatrixXd>& points) {
  const auto n = static_cast<std::size_t>(points.rows());
  if (n == 0) throw DomainError("nondominated_sort: empty input");

  std::vector<std::vector<std::size_t>> dominated_by(n);
  std::vector<std::size_t> domination_count(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto ri = points.row(static_cast<Eigen::Index>(i));
      const auto rj = points.row(static_cast<Eigen::Index>(j));
      if (dominates(ri, rj)) {
        dominated_by[i].push_back(j);
        ++domination_count[j];
      } else if (dominates(rj, ri)) {
        dominated_by[j].push_back(i);
        ++domination_count[i];
      }
    }
  }

  Fronts fronts;
  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < n; ++i)
    if (domination_count[i] == 0) current.push_back(i);
  while (!current.empty()) {
    std::vector<std::size_t> next;
    for (auto i : current)
      for (auto j : dominated_by[i])
        if (--domination_count[j] == 0) next.push_back(j);
    std::sort(next.begin(), next.end());
    fronts.push_back(std::move(current));
    current = std::move(next);
  }
  return fronts;
}

Fronts nondominated_sort(const std::vector<Eigen::VectorXd>& points) {
  if (points.empty()) throw DomainError("nondominated_sort: empty input");
  const auto k = points.front().size();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(points.size()), k);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != k) throw StructuralError("nondominated_sort: non-uniform k");
    m.row(static_cast<Eigen::Index>(i)) = points[i].transpose();
  }
  return nondominated_sort(m);
}

Eigen::VectorXd crowding_distance(const Eigen::Ref<const Eigen::MatrixXd>& points,
                                  const std::vector<std::size_t>& front) {
  const auto size = front.size();
  Eigen::VectorXd distance = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(size));
  std::vector<std::size_t> order(size);
  for (Eigen::Index obj = 0; obj < points.cols(); ++obj) {
    auto value = [&](std::size_t pos) {
      return points(static_cast<Eigen::Index>(front[pos]), obj);
    };
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return value(a) < value(b); });
    const double spread = value(order.back()) - value(order.front());
    if (!(spread > 0.0)) continue;
    distance[static_cast<Eigen::Index>(order.front())] = std::numeric_limits<double>::infinity();
    distance[static_cast<Eigen::Index>(order.back())] = std::numeric_limits<double>::infinity();
    for (std::size_t r = 1; r + 1 < size; ++r)
      distance[static_cast<Eigen::Index>(order[r])] +=
          (value(order[r + 1]) - value(order[r - 1])) / spread;
  }
  return distance;
}

Eigen::VectorXd pareto_selection_keys(const Eigen::Ref<const Eigen::MatrixXd>& points) {
  const auto n = static_cast<std::size_t>(points.rows());
  const auto fronts = nondominated_sort(points);
  std::vector<std::size_t> front_of(n);
  std::vector<double> crowd(n);
  for (std::size_t f = 0; f < fronts.size(); ++f) {
    const auto d = crowding_distance(points, fronts[f]);
    for (std::size_t r = 0; r < fronts[f].size(); ++r) {
      front_of[fronts[f][r]] = f;
      crowd[fronts[f][r]] = d[static_cast<Eigen::Index>(r)];
    }
  }
  auto better = [&](std::size_t a, std::size_t b) {
    if (front_of[a] != front_of[b]) return front_of[a] < front_of[b];
    return crowd[a] > crowd[b];
  };
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), better);

  Eigen::VectorXd keys(static_cast<Eigen::Index>(n));
  double rank = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r > 0 && better(order[r - 1], order[r])) rank = static_cast<double>(r);
    keys[static_cast<Eigen::Index>(order[r])] = rank;
  }
  return keys;
}

void validate_weights(const Eigen::Ref<const Eigen::VectorXd>& weights, Eigen::Index k) {
  if (weights.size() != k) throw DomainError("scalarize: weight count differs from k");
  if ((weights.array() < 0.0).any() || !weights.allFinite())
    throw DomainError("scalarize: weights must be non-negative");
  if (std::abs(weights.sum() - 1.0) > 1e-9) throw DomainError("scalarize: weights must sum to 1");
}

double scalarize(const Eigen::Ref<const Eigen::VectorXd>& v,
                 const Eigen::Ref<const Eigen::VectorXd>& weights) {
  validate_weights(weights, v.size());
  return weights.dot(v);
}

bool ParetoArchive::offer(const FrontMember& candidate) {
  for (const auto& m : members_) {
    if (m.chromosome == candidate.chromosome) return false;
    if (dominates(m.objectives, candidate.objectives)) return false;
  }
  std::erase_if(members_,
                [&](const FrontMember& m) { return dominates(candidate.objectives, m.objectives); });
  members_.push_back(candidate);
  return true;
}

std::vector<FrontMember> ParetoArchive::sorted() const {
  std::vector<FrontMember> out = members_;
  std::sort(out.begin(), out.end(), [](const FrontMember& a, const FrontMember& b) {
    for (Eigen::Index i = 0; i < a.objectives.size(); ++i)
      if (a.objectives[i] != b.objectives[i]) return a.objectives[i] < b.objectives[i];
    return a.chromosome < b.chromosome;
  });
  return out;
}

}  // namespace genopt

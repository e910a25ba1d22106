#include "genopt/localsearch.hpp"

#include <algorithm>

#include "genopt/errors.hpp"
#include "genopt/random.hpp"

namespace genopt {

void PatternConfig::validate() const {
  if (!(initial_step > 0.0)) throw DomainError("pattern search: initial_step must be positive");
  if (!(shrink > 0.0 && shrink < 1.0)) throw DomainError("pattern search: shrink must lie in (0, 1)");
  if (!(min_step > 0.0)) throw DomainError("pattern search: min_step must be positive");
  if (max_evals < 1) throw DomainError("pattern search: max_evals must be positive");
}

PatternResult pattern_search(const Landscape& landscape, const Eigen::VectorXd& lower,
                             const Eigen::VectorXd& upper, const Eigen::VectorXd& x0,
                             const PatternConfig& cfg, int t, std::uint64_t eval_seed) {
  cfg.validate();
  if (x0.size() != lower.size() || x0.size() != upper.size())
    throw StructuralError("pattern search: dimension mismatch");
  if ((x0.array() < lower.array()).any() || (x0.array() > upper.array()).any() || !x0.allFinite())
    throw DomainError("pattern search: start point outside the box");

  PatternResult result;
  auto f = [&](const Eigen::VectorXd& x) {
    const auto key = derive_key(eval_seed, static_cast<std::uint64_t>(t),
                                static_cast<std::uint64_t>(result.evaluations), Purpose::kEvaluation);
    ++result.evaluations;
    return landscape.evaluate(x, t, key)[0];
  };

  const Eigen::VectorXd range = upper - lower;
  Eigen::VectorXd x = x0;
  double fx = f(x);
  result.history.push_back(fx);
  double step = cfg.initial_step;

  while (step >= cfg.min_step && result.evaluations < cfg.max_evals) {
    bool moved = false;
    for (Eigen::Index j = 0; j < x.size() && !moved; ++j) {
      for (double sign : {1.0, -1.0}) {
        Eigen::VectorXd y = x;
        y[j] = std::clamp(x[j] + sign * step * range[j], lower[j], upper[j]);
        if (y[j] == x[j]) continue;
        if (result.evaluations >= cfg.max_evals) break;
        const double fy = f(y);
        if (fy < fx) {
          x = std::move(y);
          fx = fy;
          result.history.push_back(fx);
          moved = true;
          break;
        }
      }
      if (result.evaluations >= cfg.max_evals) break;
    }
    if (!moved) step *= cfg.shrink;
  }

  result.x = std::move(x);
  result.cost = fx;
  return result;
}

}  // namespace genopt

#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>

#include "genopt/errors.hpp"
#include "genopt/localsearch.hpp"
#include "oracles.hpp"

using namespace genopt;

namespace {

const Eigen::VectorXd kLower = Eigen::Vector2d(0.0, 0.0);
const Eigen::VectorXd kUpper = Eigen::Vector2d(10.0, 10.0);

const WellsLandscape& canonical() {
  static const WellsLandscape landscape(DynamicsSchedule{}, GenomeSpec::uniform(2, 0.0, 10.0, 16));
  return landscape;
}

double canonical_xy(double x, double y) { return wells_eval(canonical_wells(), Eigen::Vector2d(x, y)); }

}  // namespace

TEST_CASE("convex paraboloid converges within two minimum steps") {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  PatternConfig cfg;
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Vector2d c(u(gen), u(gen));
    const SphereLandscape bowl(c);
    const Eigen::Vector2d x0(u(gen), u(gen));
    const auto r = pattern_search(bowl, kLower, kUpper, x0, cfg);
    const double bound = 2.0 * cfg.min_step * 10.0;
    CHECK((r.x - c).cwiseAbs().maxCoeff() <= bound);
    CHECK(r.cost <= bowl.evaluate(x0, 0, 0)[0]);
  }
}

TEST_CASE("start at (2.1, 2.0) is trapped by the (2,2) well") {
  const Eigen::Vector2d x0(2.1, 2.0);
  const auto basin = oracle::grid_descent(canonical_xy, 2.1, 2.0, 0.0, 10.0, 1e-3);
  CHECK((basin - Eigen::Vector2d(2.0, 2.0)).norm() < 1e-2);

  const auto r = pattern_search(canonical(), kLower, kUpper, x0);
  CHECK(std::abs(r.cost - (-3.0)) <= 1e-3);
  CHECK((r.x - Eigen::Vector2d(2.0, 2.0)).norm() < 1e-2);
  CHECK(r.cost > -3.5);
}

TEST_CASE("starts in different basins reach different minima") {
  const auto a = pattern_search(canonical(), kLower, kUpper, Eigen::Vector2d(2.1, 2.0));
  const auto b = pattern_search(canonical(), kLower, kUpper, Eigen::Vector2d(6.5, 7.0));
  CHECK((a.x - b.x).norm() > 1.0);
  CHECK(std::abs(b.cost - (-4.0)) <= 1e-3);
}

TEST_CASE("incumbent cost never increases and runs are reproducible") {
  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Vector2d x0(u(gen), u(gen));
    const auto r = pattern_search(canonical(), kLower, kUpper, x0);
    for (std::size_t i = 1; i < r.history.size(); ++i) CHECK(r.history[i] < r.history[i - 1]);
    CHECK(r.cost == r.history.back());
    const auto again = pattern_search(canonical(), kLower, kUpper, x0);
    CHECK(again.x == r.x);
    CHECK(again.evaluations == r.evaluations);
  }
}

TEST_CASE("budget and validation") {
  PatternConfig tight;
  tight.max_evals = 25;
  const auto r = pattern_search(canonical(), kLower, kUpper, Eigen::Vector2d(5.0, 5.0), tight);
  CHECK(r.evaluations <= 25);

  CHECK_THROWS_AS(pattern_search(canonical(), kLower, kUpper, Eigen::Vector2d(11.0, 5.0)), DomainError);
  PatternConfig bad;
  bad.shrink = 1.0;
  CHECK_THROWS_AS(pattern_search(canonical(), kLower, kUpper, Eigen::Vector2d(5.0, 5.0), bad),
                  DomainError);
}

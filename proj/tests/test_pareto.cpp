#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "genopt/engine.hpp"
#include "genopt/errors.hpp"
#include "genopt/pareto.hpp"
#include "oracles.hpp"

using namespace genopt;

namespace {

std::vector<Eigen::VectorXd> random_vectors(std::mt19937_64& gen, std::size_t n, Eigen::Index k,
                                            bool integer_grid) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Eigen::VectorXd> out(n, Eigen::VectorXd(k));
  for (auto& v : out)
    for (Eigen::Index i = 0; i < k; ++i) v[i] = integer_grid ? std::floor(5.0 * u(gen)) : u(gen);
  return out;
}

std::vector<std::set<std::size_t>> as_sets(const Fronts& fronts) {
  std::vector<std::set<std::size_t>> out;
  for (const auto& f : fronts) out.emplace_back(f.begin(), f.end());
  return out;
}

RunConfig two_spheres(std::uint64_t seed) {
  RunConfig cfg;
  cfg.seed = seed;
  cfg.generations = 60;
  cfg.genome = GenomeSpec::uniform(1, -1.0, 3.0, 16);
  cfg.landscape.id = LandscapeId::kMultiSphere;
  cfg.landscape.centers = {Eigen::VectorXd::Constant(1, 0.0), Eigen::VectorXd::Constant(1, 2.0)};
  cfg.objectives = 2;
  return cfg;
}

}  // namespace

TEST_CASE("dominance examples") {
  CHECK(dominates(Eigen::Vector2d(1, 1), Eigen::Vector2d(2, 2)));
  CHECK_FALSE(dominates(Eigen::Vector2d(1, 2), Eigen::Vector2d(2, 1)));
  CHECK_FALSE(dominates(Eigen::Vector2d(2, 1), Eigen::Vector2d(1, 2)));
  CHECK_FALSE(dominates(Eigen::Vector2d(1, 2), Eigen::Vector2d(1, 2)));
  CHECK(dominates(Eigen::Vector2d(1, 2), Eigen::Vector2d(1, 3)));
  CHECK_THROWS_AS(dominates(Eigen::Vector2d(1, 2), Eigen::Vector3d(1, 2, 3)), StructuralError);
}

TEST_CASE("dominance is a strict partial order") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto v = random_vectors(gen, 3, 3, true);
    const auto &a = v[0], &b = v[1], &c = v[2];
    CHECK_FALSE(dominates(a, a));
    CHECK_FALSE((dominates(a, b) && dominates(b, a)));
    if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
  }
}

TEST_CASE("nondominated_sort: small cases") {
  const std::vector<Eigen::VectorXd> incomparable{Eigen::Vector2d(1, 3), Eigen::Vector2d(2, 2),
                                                  Eigen::Vector2d(3, 1)};
  const auto one = nondominated_sort(incomparable);
  REQUIRE(one.size() == 1);
  CHECK(one[0].size() == 3);

  const std::vector<Eigen::VectorXd> chain{Eigen::Vector2d(3, 3), Eigen::Vector2d(1, 1),
                                           Eigen::Vector2d(2, 2)};
  const auto three = nondominated_sort(chain);
  REQUIRE(three.size() == 3);
  CHECK(three[0] == std::vector<std::size_t>{1});
  CHECK(three[1] == std::vector<std::size_t>{2});
  CHECK(three[2] == std::vector<std::size_t>{0});

  CHECK_THROWS_AS(nondominated_sort(std::vector<Eigen::VectorXd>{}), DomainError);
  CHECK_THROWS_AS(nondominated_sort(std::vector<Eigen::VectorXd>{Eigen::Vector2d(1, 1),
                                                                 Eigen::Vector3d(1, 1, 1)}),
                  StructuralError);
}

TEST_CASE("nondominated_sort matches front peeling") {
  std::mt19937_64 gen(19);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + gen() % 200;
    const Eigen::Index k = trial % 2 ? 3 : 2;
    const auto pts = random_vectors(gen, n, k, trial % 3 == 0);
    const auto fronts = nondominated_sort(pts);
    CHECK(as_sets(fronts) == oracle::peel_fronts(pts));

    std::vector<int> seen(n, 0);
    for (const auto& f : fronts)
      for (auto i : f) ++seen[i];
    CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
    for (const auto& f : fronts)
      for (auto i : f)
        for (auto j : f) CHECK_FALSE(dominates(pts[i], pts[j]));
  }
}

TEST_CASE("selection keys with one objective follow cost order") {
  Eigen::MatrixXd costs(6, 1);
  costs << 3.0, 1.0, 2.0, 1.0, 5.0, 4.0;
  const auto keys = pareto_selection_keys(costs);
  for (Eigen::Index i = 0; i < 6; ++i)
    for (Eigen::Index j = 0; j < 6; ++j) {
      if (costs(i, 0) < costs(j, 0)) CHECK(keys[i] < keys[j]);
      if (costs(i, 0) == costs(j, 0)) CHECK(keys[i] == keys[j]);
    }
}

TEST_CASE("crowding: boundary points are infinite") {
  Eigen::MatrixXd pts(4, 2);
  pts << 0.0, 4.0, 1.0, 2.0, 3.0, 1.0, 4.0, 0.0;
  const auto d = crowding_distance(pts, {0, 1, 2, 3});
  CHECK(std::isinf(d[0]));
  CHECK(std::isinf(d[3]));
  CHECK(d[1] == doctest::Approx(3.0 / 4.0 + 3.0 / 4.0));
  CHECK(d[2] == doctest::Approx(3.0 / 4.0 + 2.0 / 4.0));
}

TEST_CASE("scalarize") {
  CHECK(scalarize(Eigen::Vector2d(2, 4), Eigen::Vector2d(1, 0)) == 2.0);
  CHECK(scalarize(Eigen::Vector2d(2, 4), Eigen::Vector2d(0.5, 0.5)) == 3.0);
  CHECK_THROWS_AS(scalarize(Eigen::Vector2d(2, 4), Eigen::Vector2d(0.6, 0.6)), DomainError);
  CHECK_THROWS_AS(scalarize(Eigen::Vector2d(2, 4), Eigen::Vector2d(1.5, -0.5)), DomainError);
  CHECK_THROWS_AS(scalarize(Eigen::Vector2d(2, 4), Eigen::Vector3d(0.2, 0.3, 0.5)), DomainError);
}

TEST_CASE("scalarized argmin is invariant under common positive scaling") {
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto cands = random_vectors(gen, 2 + gen() % 40, 3, false);
    Eigen::Vector3d w(u(gen), u(gen), u(gen));
    w /= w.sum();
    const double scale = std::exp(std::uniform_real_distribution<double>(-5.0, 5.0)(gen));
    auto argmin = [&](double s) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < cands.size(); ++i)
        if (scalarize(s * cands[i], w) < scalarize(s * cands[best], w)) best = i;
      return best;
    };
    CHECK(argmin(1.0) == argmin(scale));
  }
}

TEST_CASE("archive never holds a dominated pair or a duplicate") {
  ParetoArchive archive;
  std::mt19937_64 gen(2);
  for (int i = 0; i < 500; ++i) {
    const auto v = random_vectors(gen, 1, 2, true)[0];
    Chromosome c(8);
    for (std::size_t b = 0; b < 8; ++b) c.set(b, gen() & 1U);
    archive.offer({c, Eigen::VectorXd::Zero(1), v});
    for (const auto& a : archive.members())
      for (const auto& b : archive.members()) {
        CHECK_FALSE(dominates(a.objectives, b.objectives));
        if (&a != &b) CHECK(a.chromosome != b.chromosome);
      }
  }
}

TEST_CASE("two-sphere problem: archive stays within the analytic front") {
  const auto cfg = two_spheres(4);
  const double quantum = cfg.genome.quantum()[0];
  Engine engine(cfg);
  auto pop = engine.initialize();
  for (int t = 0; t < cfg.generations; ++t) {
    pop = engine.step(pop);
    const auto& members = engine.archive().members();
    for (const auto& a : members)
      for (const auto& b : members) REQUIRE_FALSE(dominates(a.objectives, b.objectives));
  }
  const auto points = pop.decoded(cfg.genome);
  Eigen::MatrixXd costs(static_cast<Eigen::Index>(pop.size()), 2);
  for (std::size_t i = 0; i < pop.size(); ++i)
    costs.row(static_cast<Eigen::Index>(i)) = pop.members[i].cost.transpose();
  const auto fronts = nondominated_sort(costs);
  for (auto i : fronts.front()) {
    const double x = points(static_cast<Eigen::Index>(i), 0);
    CHECK(x >= -quantum);
    CHECK(x <= 2.0 + quantum);
  }
  for (const auto& m : engine.archive().members()) {
    CHECK(m.x[0] >= -quantum);
    CHECK(m.x[0] <= 2.0 + quantum);
  }
}

TEST_CASE("weight sweep optima are mutually non-dominated") {
  std::vector<Eigen::VectorXd> optima;
  for (int i = 0; i <= 10; ++i) {
    auto cfg = two_spheres(100 + static_cast<std::uint64_t>(i));
    cfg.weights = Eigen::Vector2d(i / 10.0, 1.0 - i / 10.0);
    cfg.genome = GenomeSpec::uniform(1, -1.0, 3.0, 16, Coding::kGray);
    const auto trace = run(cfg);
    const Eigen::VectorXd x = trace.best_row().best_x;
    optima.push_back(Eigen::Vector2d(x[0] * x[0], (x[0] - 2.0) * (x[0] - 2.0)));
    // The weighted optimum of w x^2 + (1-w)(x-2)^2 sits at x = 2(1-w).
    CAPTURE(i);
    CHECK(std::abs(x[0] - 2.0 * (1.0 - i / 10.0)) <= 1e-2);
  }
  CHECK(nondominated_sort(optima).front().size() == optima.size());
}

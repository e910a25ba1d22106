#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "genopt/genome.hpp"
#include "genopt/landscapes.hpp"
#include "genopt/operators.hpp"
#include "genopt/pareto.hpp"
#include "genopt/population.hpp"
#include "genopt/sharing.hpp"

namespace genopt {

enum class StopKind { kBudget, kTarget, kStagnation };

struct StopRule {
  StopKind kind = StopKind::kBudget;
  /// kTarget: stop once best_cost <= target_cost.
  double target_cost = 0.0;
  /// kStagnation: stop after `window` generations without an improvement above 1e-12.
  int window = 20;
};

enum class Ranking {
  /// Scalar ranking for k = 1 or when weights are given, Pareto ranking otherwise.
  kAuto,
  kScalar,
  /// Front index, then crowding, on the raw objective vectors.
  kPareto,
};

struct RunConfig {
  std::uint64_t seed = 1;
  std::size_t population_size = 50;
  int generations = 120;
  StopRule stop;
  GenomeSpec genome = GenomeSpec::uniform(2, 0.0, 10.0, 16);
  OperatorConfig operators;
  LandscapeConfig landscape;
  SharingConfig sharing;
  std::size_t objectives = 1;
  /// Scalarization weights for k >= 2; empty for none.
  Eigen::VectorXd weights;
  Ranking ranking = Ranking::kAuto;

  /// Throws DomainError / UnsupportedConfigError.
  void validate() const;
  bool pareto_ranking() const;
};

struct TraceRow {
  int generation = 0;
  double best_cost = 0.0;
  double mean_cost = 0.0;
  double median_cost = 0.0;
  Eigen::VectorXd best_x;
  /// Mean pairwise distance of decoded points mapped onto the unit cube.
  double diversity = 0.0;
  long long evaluations = 0;
  /// Occupants per well; empty when the landscape has no wells.
  std::vector<std::size_t> niche_counts;
};

struct RunTrace {
  std::vector<TraceRow> rows;

  const TraceRow& final_row() const { return rows.back(); }
  /// Row with the lowest best_cost (earliest on ties).
  const TraceRow& best_row() const;
};

/// Generational loop: breed N offspring, merge with the parents, eliminate back to N.
///
/// Every random draw comes from a stream keyed by (seed, generation, slot, purpose),
/// so a run is a pure function of its configuration. One engine drives one run.
class Engine {
 public:
  using Observer = std::function<void(const Population&)>;

  /// Builds the landscape from `cfg.landscape`.
  explicit Engine(RunConfig cfg);
  Engine(RunConfig cfg, LandscapePtr landscape);

  /// Uniform random population, evaluated at t = 0.
  Population initialize();
  /// One generation; throws EvaluationError if an evaluation fails.
  Population step(const Population& pop);
  /// Applies `step` until the budget or the stop rule ends the run.
  RunTrace run(const Observer& observer = {});

  TraceRow summarize(const Population& pop) const;

  /// Cost used for ranking and reporting (weighted sum or first objective).
  double scalar_cost(const Individual& ind) const;

  const RunConfig& config() const { return cfg_; }
  const Landscape& landscape() const { return *landscape_; }
  long long evaluations() const { return evaluations_; }
  std::uint64_t last_mutation_count() const { return last_mutations_; }
  const ParetoArchive& archive() const { return archive_; }

 private:
  Eigen::VectorXd evaluate(const Chromosome& c, int t, std::size_t slot);
  std::vector<double> selection_keys(const std::vector<const Individual*>& members) const;
  std::vector<double> elite_keys(const std::vector<const Individual*>& members) const;
  void update_archive(const Population& pop);

  RunConfig cfg_;
  LandscapePtr landscape_;
  bool pareto_ = false;
  bool reevaluate_ = false;
  long long evaluations_ = 0;
  std::uint64_t last_mutations_ = 0;
  ParetoArchive archive_;
};

/// Builds an engine for `cfg` and runs it.
RunTrace run(const RunConfig& cfg);

}  // namespace genopt

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "genopt/genome.hpp"
#include "genopt/population.hpp"
#include "genopt/random.hpp"

namespace genopt {

struct OperatorConfig {
  double crossover_prob = 0.9;
  /// Expected number of bit flips over the whole offspring cohort per generation.
  double mutations_per_generation = 3.0;
  /// Probability that a binary tournament goes to the better contestant.
  double tournament_win_prob = 0.9;
  std::size_t elite_count = 1;

  /// Throws DomainError when a field is out of range or elite_count >= population_size.
  void validate(std::size_t population_size) const;
};

/// Single-point crossover; site in [1, L-1].
std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b,
                                            std::size_t site);

/// Flips bit `index`.
Chromosome mutate(const Chromosome& c, std::size_t index);

/// Binary tournament over `costs` (lower is better, ties go to the first drawn).
/// Returns the index of the chosen entry.
std::size_t tournament_pick(std::span<const double> costs, double win_prob, Rng& rng);

/// Tournament pick over the population's first objective.
const Individual& pick_parent(const Population& pop, double win_prob, Rng& rng);

/// Reduces a pool to `n` members and returns the surviving indices in ascending order.
///
/// The `elite_count` entries with lowest `elite_costs` (ties by index) always survive.
/// Each remaining removal draws two distinct non-elite survivors uniformly and removes
/// the worse one under `selection_costs` with probability `win_prob`, else the better.
std::vector<std::size_t> eliminate(std::span<const double> selection_costs,
                                   std::span<const double> elite_costs, std::size_t n,
                                   std::size_t elite_count, double win_prob, Rng& rng);

/// Population form of `eliminate` on raw first-objective costs.
Population eliminate_to_size(const Population& pool, std::size_t n, std::size_t elite_count,
                             double win_prob, Rng& rng);

}  // namespace genopt

#include "genopt/operators.hpp"

#include <algorithm>
#include <numeric>

#include "genopt/errors.hpp"

namespace genopt {

void OperatorConfig::validate(std::size_t population_size) const {
  if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0))
    throw DomainError("operators: crossover_prob must lie in [0, 1]");
  if (!(mutations_per_generation >= 0.0))
    throw DomainError("operators: mutations_per_generation must be non-negative");
  if (!(tournament_win_prob >= 0.5 && tournament_win_prob <= 1.0))
    throw DomainError("operators: tournament_win_prob must lie in [0.5, 1]");
  if (elite_count >= population_size)
    throw DomainError("operators: elite_count must be below the population size");
}

std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b,
                                            std::size_t site) {
  if (a.size() != b.size()) throw StructuralError("crossover: parent lengths differ");
  if (a.size() < 2 || site < 1 || site > a.size() - 1)
    throw StructuralError("crossover: site must lie in [1, L-1]");
  Chromosome c1 = a;
  Chromosome c2 = b;
  for (std::size_t i = site; i < a.size(); ++i) {
    c1.set(i, b[i]);
    c2.set(i, a[i]);
  }
  return {std::move(c1), std::move(c2)};
}

Chromosome mutate(const Chromosome& c, std::size_t index) {
  if (index >= c.size()) throw StructuralError("mutate: index out of range");
  Chromosome out = c;
  out.flip(index);
  return out;
}

std::size_t tournament_pick(std::span<const double> costs, double win_prob, Rng& rng) {
  if (costs.empty()) throw DomainError("tournament: empty population");
  if (costs.size() == 1) return 0;
  const auto first = rng.index(costs.size());
  auto second = rng.index(costs.size() - 1);
  if (second >= first) ++second;
  const bool first_better = costs[first] <= costs[second];
  const auto better = first_better ? first : second;
  const auto worse = first_better ? second : first;
  return rng.bernoulli(win_prob) ? better : worse;
}

const Individual& pick_parent(const Population& pop, double win_prob, Rng& rng) {
  pop.require_evaluated();
  const auto costs = pop.scalar_costs();
  return pop.members[tournament_pick(costs, win_prob, rng)];
}

std::vector<std::size_t> eliminate(std::span<const double> selection_costs,
                                   std::span<const double> elite_costs, std::size_t n,
                                   std::size_t elite_count, double win_prob, Rng& rng) {
  const auto size = selection_costs.size();
  if (elite_costs.size() != size) throw StructuralError("eliminate: cost spans differ in length");
  if (n > size) throw DomainError("eliminate: target size exceeds pool size");
  if (elite_count > n) throw DomainError("eliminate: elite_count exceeds target size");

  std::vector<std::size_t> order(size);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return elite_costs[a] < elite_costs[b]; });

  std::vector<std::size_t> kept(order.begin(), order.begin() + static_cast<long>(elite_count));
  std::vector<std::size_t> open(order.begin() + static_cast<long>(elite_count), order.end());
  std::sort(open.begin(), open.end());

  auto removals = size - n;
  while (removals > 0) {
    std::size_t victim;
    if (open.size() == 1) {
      victim = 0;
    } else {
      const auto first = rng.index(open.size());
      auto second = rng.index(open.size() - 1);
      if (second >= first) ++second;
      const bool first_better = selection_costs[open[first]] <= selection_costs[open[second]];
      const auto better = first_better ? first : second;
      const auto worse = first_better ? second : first;
      victim = rng.bernoulli(win_prob) ? worse : better;
    }
    open.erase(open.begin() + static_cast<long>(victim));
    --removals;
  }

  kept.insert(kept.end(), open.begin(), open.end());
  std::sort(kept.begin(), kept.end());
  return kept;
}

Population eliminate_to_size(const Population& pool, std::size_t n, std::size_t elite_count,
                             double win_prob, Rng& rng) {
  pool.require_evaluated();
  const auto costs = pool.scalar_costs();
  const auto keep = eliminate(costs, costs, n, elite_count, win_prob, rng);
  Population out;
  out.generation = pool.generation;
  out.members.reserve(keep.size());
  for (auto i : keep) out.members.push_back(pool.members[i]);
  return out;
}

}  // namespace genopt

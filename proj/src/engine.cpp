#include "genopt/engine.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>

#include "genopt/errors.hpp"
#include "genopt/random.hpp"

namespace genopt {

void RunConfig::validate() const {
  if (population_size < 2) throw DomainError("run: N must be at least 2");
  if (generations < 0) throw DomainError("run: G must be non-negative");
  if (stop.kind == StopKind::kStagnation && stop.window < 1)
    throw DomainError("run: stagnation window must be positive");
  operators.validate(population_size);
  sharing.validate();
  if (objectives < 1) throw DomainError("objectives: k must be at least 1");
  if (weights.size() > 0) validate_weights(weights, static_cast<Eigen::Index>(objectives));
  if (sharing.enabled && pareto_ranking())
    throw UnsupportedConfigError("sharing: needs a scalar cost (k = 1 or weights)");
}

bool RunConfig::pareto_ranking() const {
  switch (ranking) {
    case Ranking::kScalar: return false;
    case Ranking::kPareto: return true;
    case Ranking::kAuto: return objectives > 1 && weights.size() == 0;
  }
  return false;
}

const TraceRow& RunTrace::best_row() const {
  return *std::min_element(rows.begin(), rows.end(), [](const TraceRow& a, const TraceRow& b) {
    return a.best_cost < b.best_cost;
  });
}

Engine::Engine(RunConfig cfg)
    : Engine(cfg, make_landscape(cfg.landscape, cfg.genome, cfg.seed, cfg.generations)) {}

Engine::Engine(RunConfig cfg, LandscapePtr landscape)
    : cfg_(std::move(cfg)), landscape_(std::move(landscape)) {
  cfg_.validate();
  if (landscape_->objectives() != cfg_.objectives)
    throw DomainError("objectives: k differs from the landscape's objective count");
  pareto_ = cfg_.pareto_ranking();
  reevaluate_ = landscape_->time_varying() || landscape_->noisy();
}

Eigen::VectorXd Engine::evaluate(const Chromosome& c, int t, std::size_t slot) {
  const Eigen::VectorXd x = decode(cfg_.genome, c);
  Eigen::VectorXd cost;
  try {
    cost = landscape_->evaluate(x, t, derive_key(cfg_.seed, static_cast<std::uint64_t>(t), slot,
                                                 Purpose::kEvaluation));
  } catch (const std::exception& e) {
    throw EvaluationError(t, e.what());
  }
  ++evaluations_;
  if (cost.size() != static_cast<Eigen::Index>(cfg_.objectives))
    throw EvaluationError(t, "landscape returned the wrong number of objectives");
  if (!cost.allFinite()) throw EvaluationError(t, "landscape returned a non-finite cost");
  return cost;
}

double Engine::scalar_cost(const Individual& ind) const {
  if (!ind.evaluated()) throw StateError("individual is not evaluated");
  if (cfg_.weights.size() > 0) return cfg_.weights.dot(ind.cost);
  return ind.cost[0];
}

std::vector<double> Engine::selection_keys(const std::vector<const Individual*>& members) const {
  std::vector<double> keys(members.size());
  if (pareto_) {
    Eigen::MatrixXd points(static_cast<Eigen::Index>(members.size()),
                           static_cast<Eigen::Index>(cfg_.objectives));
    for (std::size_t i = 0; i < members.size(); ++i)
      points.row(static_cast<Eigen::Index>(i)) = members[i]->cost.transpose();
    const auto k = pareto_selection_keys(points);
    std::copy(k.begin(), k.end(), keys.begin());
    return keys;
  }
  for (std::size_t i = 0; i < members.size(); ++i) keys[i] = scalar_cost(*members[i]);
  if (cfg_.sharing.enabled) {
    Eigen::MatrixXd points(static_cast<Eigen::Index>(members.size()),
                           static_cast<Eigen::Index>(cfg_.genome.size()));
    for (std::size_t i = 0; i < members.size(); ++i)
      points.row(static_cast<Eigen::Index>(i)) =
          normalize(cfg_.genome, decode(cfg_.genome, members[i]->chromosome)).transpose();
    const auto shared = shared_cost(keys, points, cfg_.sharing);
    std::copy(shared.begin(), shared.end(), keys.begin());
  }
  return keys;
}

std::vector<double> Engine::elite_keys(const std::vector<const Individual*>& members) const {
  // Elites are ranked on raw cost so sharing never evicts the incumbent best.
  if (pareto_) return selection_keys(members);
  std::vector<double> keys(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) keys[i] = scalar_cost(*members[i]);
  return keys;
}

void Engine::update_archive(const Population& pop) {
  if (!pareto_) return;
  Eigen::MatrixXd points(static_cast<Eigen::Index>(pop.size()),
                         static_cast<Eigen::Index>(cfg_.objectives));
  for (std::size_t i = 0; i < pop.size(); ++i)
    points.row(static_cast<Eigen::Index>(i)) = pop.members[i].cost.transpose();
  const auto fronts = nondominated_sort(points);
  for (auto i : fronts.front()) {
    const auto& m = pop.members[i];
    archive_.offer({m.chromosome, decode(cfg_.genome, m.chromosome), m.cost});
  }
}

Population Engine::initialize() {
  const auto length = cfg_.genome.total_bits();
  Population pop;
  pop.generation = 0;
  pop.members.resize(cfg_.population_size);
  for (std::size_t i = 0; i < cfg_.population_size; ++i) {
    Rng rng(derive_key(cfg_.seed, 0, i, Purpose::kInit));
    Chromosome c(length);
    for (std::size_t b = 0; b < length; ++b) c.set(b, rng.bit());
    pop.members[i].chromosome = std::move(c);
    pop.members[i].born_at = 0;
  }
  for (std::size_t i = 0; i < pop.size(); ++i)
    pop.members[i].cost = evaluate(pop.members[i].chromosome, 0, i);
  update_archive(pop);
  return pop;
}

Population Engine::step(const Population& pop) {
  pop.require_evaluated();
  const auto n = cfg_.population_size;
  if (pop.size() != n) throw StateError("step: population size differs from N");
  const auto& ops = cfg_.operators;
  const int next = pop.generation + 1;
  const auto gen_key = static_cast<std::uint64_t>(next);
  const auto length = cfg_.genome.total_bits();

  std::vector<const Individual*> parents;
  for (const auto& m : pop.members) parents.push_back(&m);
  const auto parent_keys = selection_keys(parents);

  std::vector<Chromosome> offspring;
  offspring.reserve(n);
  for (std::size_t pair = 0; offspring.size() < n; ++pair) {
    Rng rng(derive_key(cfg_.seed, gen_key, pair, Purpose::kPairing));
    const auto& a = pop.members[tournament_pick(parent_keys, ops.tournament_win_prob, rng)];
    const auto& b = pop.members[tournament_pick(parent_keys, ops.tournament_win_prob, rng)];
    if (length >= 2 && rng.bernoulli(ops.crossover_prob)) {
      const auto site = 1 + static_cast<std::size_t>(rng.index(length - 1));
      auto [c1, c2] = crossover(a.chromosome, b.chromosome, site);
      offspring.push_back(std::move(c1));
      if (offspring.size() < n) offspring.push_back(std::move(c2));
    } else {
      offspring.push_back(a.chromosome);
      if (offspring.size() < n) offspring.push_back(b.chromosome);
    }
  }

  Rng mutation_rng(derive_key(cfg_.seed, gen_key, 0, Purpose::kMutation));
  last_mutations_ = mutation_rng.poisson(ops.mutations_per_generation);
  const auto cohort_bits = static_cast<std::uint64_t>(n * length);
  for (std::uint64_t k = 0; k < last_mutations_; ++k) {
    const auto pos = mutation_rng.index(cohort_bits);
    offspring[pos / length].flip(pos % length);
  }

  Population pool;
  pool.generation = next;
  pool.members.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    Individual ind = pop.members[i];
    if (reevaluate_) ind.cost = evaluate(ind.chromosome, next, i);
    pool.members.push_back(std::move(ind));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Individual child;
    child.chromosome = std::move(offspring[i]);
    child.born_at = next;
    child.cost = evaluate(child.chromosome, next, n + i);
    pool.members.push_back(std::move(child));
  }

  std::vector<const Individual*> everyone;
  for (const auto& m : pool.members) everyone.push_back(&m);
  const auto sel = selection_keys(everyone);
  const auto elite = elite_keys(everyone);
  Rng elimination_rng(derive_key(cfg_.seed, gen_key, 0, Purpose::kElimination));
  const auto keep =
      eliminate(sel, elite, n, ops.elite_count, ops.tournament_win_prob, elimination_rng);

  Population out;
  out.generation = next;
  out.members.reserve(n);
  for (auto i : keep) out.members.push_back(std::move(pool.members[i]));
  update_archive(out);
  return out;
}

TraceRow Engine::summarize(const Population& pop) const {
  TraceRow row;
  row.generation = pop.generation;
  row.evaluations = evaluations_;
  std::vector<double> costs;
  for (const auto& m : pop.members) costs.push_back(scalar_cost(m));
  const auto best = static_cast<std::size_t>(
      std::distance(costs.begin(), std::min_element(costs.begin(), costs.end())));
  row.best_cost = costs[best];
  row.best_x = decode(cfg_.genome, pop.members[best].chromosome);
  row.mean_cost = std::accumulate(costs.begin(), costs.end(), 0.0) / static_cast<double>(costs.size());
  std::vector<double> sorted = costs;
  std::sort(sorted.begin(), sorted.end());
  const auto mid = sorted.size() / 2;
  row.median_cost = sorted.size() % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
  const Eigen::MatrixXd points = pop.decoded(cfg_.genome);
  row.diversity = mean_pairwise_distance(normalize_rows(cfg_.genome, points));
  const auto wells = landscape_->wells_at(pop.generation);
  if (!wells.empty()) row.niche_counts = niche_report(points, wells).counts;
  return row;
}

RunTrace Engine::run(const Observer& observer) {
  RunTrace trace;
  Population pop = initialize();
  if (observer) observer(pop);
  trace.rows.push_back(summarize(pop));

  double best = trace.rows.back().best_cost;
  int stale = 0;
  for (int g = 0; g < cfg_.generations; ++g) {
    if (cfg_.stop.kind == StopKind::kTarget && trace.rows.back().best_cost <= cfg_.stop.target_cost)
      break;
    if (cfg_.stop.kind == StopKind::kStagnation && stale >= cfg_.stop.window) break;
    pop = step(pop);
    if (observer) observer(pop);
    trace.rows.push_back(summarize(pop));
    const double current = trace.rows.back().best_cost;
    if (best - current > 1e-12) {
      best = current;
      stale = 0;
    } else {
      ++stale;
    }
  }
  return trace;
}

RunTrace run(const RunConfig& cfg) {
  Engine engine(cfg);
  return engine.run();
}

}  // namespace genopt

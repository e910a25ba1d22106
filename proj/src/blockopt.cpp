#include "genopt/blockopt.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>
#include <utility>

#include "genopt/errors.hpp"
#include "genopt/random.hpp"

namespace genopt {

void BlockPartition::validate(std::size_t p) const {
  if (blocks.empty()) throw DomainError("blocks: partition is empty");
  if (!(epsilon > 0.0)) throw DomainError("blocks: epsilon must be positive");
  if (max_cycles < 1) throw DomainError("blocks: max_cycles must be positive");
  std::vector<int> seen(p, 0);
  for (const auto& block : blocks) {
    if (block.empty()) throw DomainError("blocks: empty block");
    for (auto j : block) {
      if (j >= p) throw DomainError("blocks: index " + std::to_string(j) + " out of range");
      if (seen[j]++) throw DomainError("blocks: index " + std::to_string(j) + " appears twice");
    }
  }
  for (std::size_t j = 0; j < p; ++j)
    if (!seen[j]) throw DomainError("blocks: index " + std::to_string(j) + " not covered");
}

BlockPartition BlockPartition::per_parameter(std::size_t p) {
  BlockPartition out;
  for (std::size_t j = 0; j < p; ++j) out.blocks.push_back({j});
  return out;
}

BlockPartition BlockPartition::parse(std::string_view text) {
  BlockPartition out;
  std::vector<std::size_t> current;
  auto flush_index = [&](std::string_view token) {
    std::size_t value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc() || ptr != end)
      throw DomainError("blocks: malformed index '" + std::string(token) + "'");
    current.push_back(value);
  };
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',' || text[i] == '|') {
      flush_index(text.substr(start, i - start));
      start = i + 1;
      if (i == text.size() || text[i] == '|') out.blocks.push_back(std::exchange(current, {}));
    }
  }
  return out;
}

std::uint64_t block_seed(std::uint64_t seed, int cycle, std::size_t block) {
  return derive_key(seed, static_cast<std::uint64_t>(cycle), block, Purpose::kBlockRun);
}

SubspaceLandscape::SubspaceLandscape(LandscapePtr base, Eigen::VectorXd frozen,
                                     std::vector<std::size_t> indices)
    : base_(std::move(base)), frozen_(std::move(frozen)), indices_(std::move(indices)) {}

Eigen::VectorXd SubspaceLandscape::embed(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  if (static_cast<std::size_t>(x.size()) != indices_.size())
    throw StructuralError("subspace: block dimension mismatch");
  Eigen::VectorXd full = frozen_;
  for (std::size_t i = 0; i < indices_.size(); ++i)
    full[static_cast<Eigen::Index>(indices_[i])] = x[static_cast<Eigen::Index>(i)];
  return full;
}

Eigen::VectorXd SubspaceLandscape::evaluate(const Eigen::Ref<const Eigen::VectorXd>& x, int t,
                                            std::uint64_t eval_key) const {
  return base_->evaluate(embed(x), t, eval_key);
}

BlockResult block_optimize(const RunConfig& base, LandscapePtr landscape,
                           const BlockPartition& partition) {
  base.validate();
  partition.validate(base.genome.size());
  if (landscape->time_varying())
    throw UnsupportedConfigError("blockopt: dynamic landscapes are not supported");
  if (base.pareto_ranking())
    throw UnsupportedConfigError("blockopt: needs a scalar cost (k = 1 or weights)");

  auto scalar = [&](const Eigen::VectorXd& cost) {
    return base.weights.size() > 0 ? base.weights.dot(cost) : cost[0];
  };

  BlockResult result;
  {
    Rng rng(derive_key(base.seed, 0, 0, Purpose::kIncumbent));
    Chromosome c(base.genome.total_bits());
    for (std::size_t b = 0; b < c.size(); ++b) c.set(b, rng.bit());
    result.x = decode(base.genome, c);
    result.cost = scalar(
        landscape->evaluate(result.x, 0, derive_key(base.seed, 0, 0, Purpose::kEvaluation)));
  }

  for (int cycle = 1; cycle <= partition.max_cycles; ++cycle) {
    const double start_cost = result.cost;
    for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
      const auto& indices = partition.blocks[b];
      RunConfig sub = base;
      sub.seed = block_seed(base.seed, cycle, b);
      sub.genome = base.genome.select(indices);
      auto sub_landscape = std::make_shared<SubspaceLandscape>(landscape, result.x, indices);
      Engine engine(sub, sub_landscape);
      const auto trace = engine.run();
      const auto& best = trace.best_row();
      if (best.best_cost < result.cost) {
        result.x = sub_landscape->embed(best.best_x);
        result.cost = best.best_cost;
      }
      result.history.push_back({cycle, b, result.cost});
    }
    result.cycles = cycle;
    const double gain = start_cost - result.cost;
    const double scale = std::max(std::abs(start_cost), 1e-300);
    if (gain / scale < partition.epsilon) break;
  }
  return result;
}

}  // namespace genopt

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "genopt/engine.hpp"
#include "genopt/landscapes.hpp"

namespace genopt {

struct BlockPartition {
  /// Disjoint parameter index groups covering every parameter, optimized in this order.
  std::vector<std::vector<std::size_t>> blocks;
  /// A cycle whose relative cost improvement falls below this ends the run.
  double epsilon = 1e-6;
  int max_cycles = 20;

  /// Throws DomainError unless the blocks partition {0, ..., p-1}.
  void validate(std::size_t p) const;

  /// One block per parameter.
  static BlockPartition per_parameter(std::size_t p);
  /// Parses "0,1|2,3": '|' separates blocks, ',' separates indices.
  static BlockPartition parse(std::string_view text);
};

struct BlockStep {
  int cycle = 0;
  std::size_t block = 0;
  double incumbent_cost = 0.0;
};

struct BlockResult {
  Eigen::VectorXd x;
  double cost = 0.0;
  int cycles = 0;
  std::vector<BlockStep> history;
};

/// Seed of the GA run for `block` in `cycle` (cycles count from 1).
std::uint64_t block_seed(std::uint64_t seed, int cycle, std::size_t block);

/// Evaluates a block of parameters with the others frozen at `frozen`.
class SubspaceLandscape final : public Landscape {
 public:
  SubspaceLandscape(LandscapePtr base, Eigen::VectorXd frozen, std::vector<std::size_t> indices);

  std::size_t objectives() const override { return base_->objectives(); }
  Eigen::VectorXd evaluate(const Eigen::Ref<const Eigen::VectorXd>& x, int t,
                           std::uint64_t eval_key) const override;
  bool noisy() const override { return base_->noisy(); }

  Eigen::VectorXd embed(const Eigen::Ref<const Eigen::VectorXd>& x) const;

 private:
  LandscapePtr base_;
  Eigen::VectorXd frozen_;
  std::vector<std::size_t> indices_;
};

/// Block-coordinate optimization: cycles a GA over each block in turn, the other
/// coordinates frozen at the incumbent, and adopts a block result only when it
/// lowers the incumbent cost. Uses `base`'s genome, N, G, operators and seed.
/// Throws UnsupportedConfigError for time-varying landscapes or Pareto ranking.
BlockResult block_optimize(const RunConfig& base, LandscapePtr landscape,
                           const BlockPartition& partition);

}  // namespace genopt

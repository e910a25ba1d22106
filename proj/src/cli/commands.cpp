#include "genopt/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <set>

#include "genopt/errors.hpp"
#include "genopt/localsearch.hpp"
#include "genopt/random.hpp"

namespace genopt::cli {

namespace {

/// Radius around the global center counted as "in the global basin".
constexpr double kBasinRadius = 1.0;

void prepare_out(const CommandOptions& opts) { std::filesystem::create_directories(opts.out); }

template <typename Body>
int guarded(std::ostream& log, Body&& body) {
  try {
    body();
    return kOk;
  } catch (const ConfigError& e) {
    log << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
}

}  // namespace

ExperimentConfig load_for(const CommandOptions& opts) {
  auto cfg = load_config(opts.config);
  if (opts.seed) {
    cfg.run.seed = *opts.seed;
    validate(cfg);
  }
  return cfg;
}

RunOutput run_experiment(const ExperimentConfig& cfg) {
  Engine engine(cfg.run);
  const int g = cfg.run.generations;
  const std::set<int> marks{0, g / 4, g / 2, 3 * g / 4, g};
  RunOutput out;
  Population last;
  out.trace = engine.run([&](const Population& pop) {
    if (marks.contains(pop.generation))
      out.snapshots.push_back({pop.generation, pop.decoded(cfg.run.genome)});
    last = pop;
  });
  if (out.snapshots.empty() || out.snapshots.back().generation != last.generation)
    out.snapshots.push_back({last.generation, last.decoded(cfg.run.genome)});
  out.final_wells = engine.landscape().wells_at(last.generation);
  return out;
}

std::vector<CompareRow> compare_experiment(const ExperimentConfig& cfg, std::size_t starts) {
  if (cfg.run.pareto_ranking() || cfg.run.objectives != 1)
    throw ConfigError("config: 'objectives.k' must be 1 for compare");
  const auto& genome = cfg.run.genome;
  std::vector<CompareRow> rows;
  for (std::size_t i = 0; i < starts; ++i) {
    RunConfig trial = cfg.run;
    trial.seed = cfg.run.seed + i;
    Engine engine(trial);
    if (!engine.landscape().global_center(0))
      throw ConfigError("config: 'landscape.id' has no known global optimum for compare");
    const auto trace = engine.run();
    const auto& last = trace.final_row();

    CompareRow row;
    row.seed = trial.seed;
    row.ga_best = last.best_cost;
    row.ga_in_global_basin =
        (last.best_x - *engine.landscape().global_center(last.generation)).norm() <= kBasinRadius;

    Rng rng(derive_key(trial.seed, 0, 0, Purpose::kStart));
    Eigen::VectorXd x0(static_cast<Eigen::Index>(genome.size()));
    for (std::size_t j = 0; j < genome.size(); ++j)
      x0[static_cast<Eigen::Index>(j)] = rng.uniform(genome.param(j).lo, genome.param(j).hi);
    const auto ps =
        pattern_search(engine.landscape(), genome.lower(), genome.upper(), x0, cfg.pattern, 0, trial.seed);
    row.ps_best = ps.cost;
    row.ps_in_global_basin = (ps.x - *engine.landscape().global_center(0)).norm() <= kBasinRadius;
    rows.push_back(row);
  }
  return rows;
}

std::vector<FrontMember> front_experiment(const ExperimentConfig& cfg) {
  if (cfg.run.objectives < 2) throw ConfigError("config: 'objectives.k' must be at least 2 for front");
  RunConfig run = cfg.run;
  run.ranking = Ranking::kPareto;
  Engine engine(run);
  engine.run();
  return engine.archive().sorted();
}

BlockResult blockopt_experiment(const ExperimentConfig& cfg, const BlockPartition& partition) {
  const auto landscape =
      make_landscape(cfg.run.landscape, cfg.run.genome, cfg.run.seed, cfg.run.generations);
  return block_optimize(cfg.run, landscape, partition);
}

int cmd_run(const CommandOptions& opts, std::ostream& log) {
  return guarded(log, [&] {
    const auto cfg = load_for(opts);
    prepare_out(opts);
    const auto started = std::chrono::steady_clock::now();
    const auto result = run_experiment(cfg);
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    const auto p = cfg.run.genome.size();
    const auto wells = result.trace.rows.front().niche_counts.size();
    write_file_atomic(opts.out / "trace.csv", trace_csv(result.trace, p, wells));

    const auto& last = result.trace.final_row();
    nlohmann::json best_x = nlohmann::json::object();
    for (std::size_t j = 0; j < p; ++j)
      best_x[cfg.run.genome.param(j).name] = last.best_x[static_cast<Eigen::Index>(j)];
    nlohmann::json summary = {
        {"config", to_json(cfg)},
        {"final", {{"generation", last.generation}, {"best_cost", last.best_cost}, {"best_x", best_x}}},
        {"evaluations", last.evaluations},
        {"wall_time_seconds", wall},
    };
    if (p == 2) {
      write_file_atomic(opts.out / "population.svg",
                        population_svg(result.snapshots, cfg.run.genome, result.final_wells));
    } else {
      const std::string notice = "population plot skipped: needs exactly 2 parameters";
      summary["notice"] = notice;
      log << notice << '\n';
    }
    write_file_atomic(opts.out / "summary.json", summary.dump(2) + "\n");
    log << "best cost " << format_number(last.best_cost) << " after " << last.evaluations
        << " evaluations\n";
  });
}

int cmd_compare(const CommandOptions& opts, std::ostream& log) {
  return guarded(log, [&] {
    const auto cfg = load_for(opts);
    prepare_out(opts);
    const auto rows = compare_experiment(cfg, opts.starts);
    write_file_atomic(opts.out / "compare.csv", compare_csv(rows));
    log << "compared " << rows.size() << " paired trials\n";
  });
}

int cmd_front(const CommandOptions& opts, std::ostream& log) {
  return guarded(log, [&] {
    const auto cfg = load_for(opts);
    prepare_out(opts);
    const auto members = front_experiment(cfg);
    write_file_atomic(opts.out / "front.csv", front_csv(members));
    if (cfg.run.objectives == 2)
      write_file_atomic(opts.out / "front.svg", front_svg(members));
    else
      log << "front plot skipped: needs exactly 2 objectives\n";
    log << "front holds " << members.size() << " points\n";
  });
}

int cmd_blockopt(const CommandOptions& opts, std::ostream& log) {
  return guarded(log, [&] {
    const auto cfg = load_for(opts);
    BlockPartition partition = BlockPartition::per_parameter(cfg.run.genome.size());
    try {
      if (opts.blocks) partition = BlockPartition::parse(*opts.blocks);
      partition.epsilon = cfg.blockopt.epsilon;
      partition.max_cycles = cfg.blockopt.max_cycles;
      partition.validate(cfg.run.genome.size());
    } catch (const std::exception& e) {
      throw ConfigError(std::string("config: '--blocks': ") + e.what());
    }
    if (cfg.run.landscape.dynamics.kind != DynamicsKind::kStatic)
      throw ConfigError("config: 'landscape.dynamics.kind' must be static for blockopt");
    prepare_out(opts);
    const auto result = blockopt_experiment(cfg, partition);
    write_file_atomic(opts.out / "blocks.csv", blocks_csv(result.history));
    log << "incumbent cost " << format_number(result.cost) << " after " << result.cycles
        << " cycles\n";
  });
}

int execute(const std::string& command, const CommandOptions& opts, std::ostream& log) {
  if (command == "run") return cmd_run(opts, log);
  if (command == "compare") return cmd_compare(opts, log);
  if (command == "front") return cmd_front(opts, log);
  if (command == "blockopt") return cmd_blockopt(opts, log);
  log << "error: unknown command '" << command << "'\n";
  return kConfigError;
}

}  // namespace genopt::cli

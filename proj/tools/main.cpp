#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "genopt/cli/commands.hpp"

int main(int argc, char** argv) {
  using genopt::cli::CommandOptions;

  CLI::App app{"Genetic optimization experiments"};
  app.require_subcommand(1);

  CommandOptions opts;
  std::uint64_t seed = 0;
  std::string blocks;

  std::vector<CLI::Option*> seed_options;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opts.config, "Configuration file (JSON)")->required();
    sub->add_option("--out", opts.out, "Output directory")->capture_default_str();
    seed_options.push_back(sub->add_option("--seed", seed, "Override the configured seed"));
  };

  auto* run = app.add_subcommand("run", "Run the GA and write trace.csv, summary.json, population.svg");
  add_common(run);
  auto* compare = app.add_subcommand("compare", "Paired GA vs pattern-search trials -> compare.csv");
  add_common(compare);
  compare->add_option("--starts", opts.starts, "Number of paired trials")->capture_default_str();
  auto* front = app.add_subcommand("front", "Multi-objective run -> front.csv, front.svg");
  add_common(front);
  auto* blockopt = app.add_subcommand("blockopt", "Block-coordinate optimization -> blocks.csv");
  add_common(blockopt);
  auto* blocks_option =
      blockopt->add_option("--blocks", blocks, "Index groups, e.g. \"0,1|2,3\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return genopt::cli::kConfigError;
  }

  for (const auto* option : seed_options)
    if (option->count() > 0) opts.seed = seed;
  if (blocks_option->count() > 0) opts.blocks = blocks;
  return genopt::cli::execute(app.get_subcommands().front()->get_name(), opts, std::cerr);
}

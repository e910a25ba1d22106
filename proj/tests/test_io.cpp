#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "genopt/cli/commands.hpp"
#include "genopt/cli/io.hpp"

using namespace genopt;
using namespace genopt::cli;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("genopt_io_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_config(const fs::path& dir, const std::string& text) {
  const auto path = dir / "config.json";
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("numbers print with nine significant digits") {
  CHECK(format_number(1.0 / 3.0) == "0.333333333");
  CHECK(format_number(-4.0) == "-4");
  CHECK(format_number(1e-12) == "1e-12");
}

TEST_CASE("trace CSV parses back to the same bytes") {
  RunConfig cfg;
  cfg.generations = 12;
  const auto trace = run(cfg);
  const auto text = trace_csv(trace, 2, 4);
  CHECK(text.rfind("generation,best_cost,mean_cost,median_cost,best_x_0,best_x_1,diversity,"
                   "evaluations,niche_0,niche_1,niche_2,niche_3\n",
                   0) == 0);
  CHECK(trace_csv(parse_trace_csv(text), 2, 4) == text);

  RunConfig sphere;
  sphere.generations = 4;
  sphere.genome = GenomeSpec::uniform(3, -1.0, 1.0, 10);
  sphere.landscape.id = LandscapeId::kSphere;
  sphere.landscape.center = Eigen::Vector3d::Zero();
  const auto plain = trace_csv(run(sphere), 3, 0);
  CHECK(plain.find("niche") == std::string::npos);
  CHECK(trace_csv(parse_trace_csv(plain), 3, 0) == plain);
}

TEST_CASE("compare CSV with no trials reports NaN rates") {
  CHECK(compare_csv({}) ==
        "seed,ga_best,ga_in_global_basin,ps_best,ps_in_global_basin\nsuccess_rate,,nan,,nan\n");
  const std::vector<CompareRow> rows{{1, -4.0, true, -3.0, false}, {2, -4.0, true, -4.0, true}};
  const auto text = compare_csv(rows);
  CHECK(text.find("1,-4,1,-3,0\n") != std::string::npos);
  CHECK(text.find("success_rate,,1,,0.5\n") != std::string::npos);
}

TEST_CASE("blocks and front CSV layouts") {
  CHECK(blocks_csv({{1, 0, 2.5}, {1, 1, 0.5}}) == "cycle,block_index,incumbent_cost\n1,0,2.5\n1,1,0.5\n");
  const std::vector<FrontMember> members{{Chromosome(4), Eigen::VectorXd::Constant(1, 0.5),
                                          Eigen::Vector2d(0.25, 2.25)}};
  CHECK(front_csv(members) == "x_0,f_0,f_1\n0.5,0.25,2.25\n");
}

TEST_CASE("SVG output is well formed and marks wells") {
  const auto genome = GenomeSpec::uniform(2, 0.0, 10.0, 8);
  Snapshot s{0, Eigen::MatrixXd::Constant(3, 2, 5.0)};
  const auto svg = population_svg({s}, genome, canonical_wells());
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);
}

TEST_CASE("cmd_run: zero generations writes header plus one row") {
  const auto dir = scratch("g0");
  CommandOptions opts;
  opts.config = write_config(dir, R"({"run": {"G": 0}})");
  opts.out = dir / "out";
  std::ostringstream log;
  REQUIRE(cmd_run(opts, log) == kOk);
  const auto trace = slurp(opts.out / "trace.csv");
  CHECK(std::count(trace.begin(), trace.end(), '\n') == 2);
  CHECK(fs::exists(opts.out / "summary.json"));
  CHECK(fs::exists(opts.out / "population.svg"));
}

TEST_CASE("cmd_run: exit codes") {
  const auto dir = scratch("codes");
  std::ostringstream log;
  CommandOptions bad;
  bad.config = write_config(dir, R"({"run": {"N": 10, "Q": 1}})");
  bad.out = dir / "out";
  CHECK(cmd_run(bad, log) == kConfigError);
  CHECK(log.str().find("run.Q") != std::string::npos);

  CommandOptions blocked;
  blocked.config = write_config(dir, R"({"run": {"G": 1}})");
  std::ofstream(dir / "occupied") << "x";
  blocked.out = dir / "occupied";
  CHECK(cmd_run(blocked, log) == kRuntimeError);

  CHECK(execute("dance", blocked, log) == kConfigError);
}

TEST_CASE("cmd_run skips the plot for more than two parameters") {
  const auto dir = scratch("p3");
  CommandOptions opts;
  opts.config = write_config(dir, R"({"run": {"G": 2},
    "genome": {"params": [{"name": "a", "lo": -1, "hi": 1}, {"name": "b", "lo": -1, "hi": 1},
                          {"name": "c", "lo": -1, "hi": 1}]},
    "landscape": {"id": "sphere", "center": [0, 0, 0]}})");
  opts.out = dir / "out";
  std::ostringstream log;
  REQUIRE(cmd_run(opts, log) == kOk);
  CHECK_FALSE(fs::exists(opts.out / "population.svg"));
  CHECK(log.str().find("skipped") != std::string::npos);
}

TEST_CASE("cmd_compare: convex single well gives full success for both methods") {
  const auto dir = scratch("convex");
  CommandOptions opts;
  opts.config = write_config(dir, R"({"run": {"G": 40},
    "landscape": {"wells": [{"center": [4, 6], "depth": 1, "width": 3}]}})");
  opts.out = dir / "out";
  opts.starts = 10;
  std::ostringstream log;
  REQUIRE(cmd_compare(opts, log) == kOk);
  CHECK(slurp(opts.out / "compare.csv").find("success_rate,,1,,1\n") != std::string::npos);
}

TEST_CASE("cmd_front: single feasible point gives a one-row front") {
  const auto dir = scratch("point");
  CommandOptions opts;
  opts.config = write_config(dir, R"({"run": {"N": 4, "G": 3},
    "genome": {"params": [{"name": "x", "lo": 0, "hi": 1, "bits": 1}]},
    "landscape": {"id": "multi_sphere", "centers": [[0], [0]]}})");
  opts.out = dir / "out";
  std::ostringstream log;
  REQUIRE(cmd_front(opts, log) == kOk);
  CHECK(slurp(opts.out / "front.csv") == "x_0,f_0,f_1\n0,0,0\n");
}

TEST_CASE("cmd_blockopt: partition and dynamics errors are config errors") {
  const auto dir = scratch("blocks");
  std::ostringstream log;
  CommandOptions opts;
  opts.config = write_config(dir, R"({"run": {"G": 5}})");
  opts.out = dir / "out";
  opts.blocks = "0|0";
  CHECK(cmd_blockopt(opts, log) == kConfigError);
  CHECK(log.str().find("--blocks") != std::string::npos);

  opts.blocks.reset();
  opts.config = write_config(dir, R"({"run": {"G": 5}, "landscape": {"dynamics": {"kind": "drift"}}})");
  CHECK(cmd_blockopt(opts, log) == kConfigError);
  CHECK(log.str().find("landscape.dynamics.kind") != std::string::npos);

  opts.config = write_config(dir, R"({"run": {"G": 5}})");
  opts.blocks = "0,1";
  REQUIRE(cmd_blockopt(opts, log) == kOk);
  const auto text = slurp(opts.out / "blocks.csv");
  CHECK(text.rfind("cycle,block_index,incumbent_cost\n1,0,", 0) == 0);
}

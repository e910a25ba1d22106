#include "genopt/cli/config.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "genopt/errors.hpp"

namespace genopt::cli {

using nlohmann::json;

namespace {

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

[[noreturn]] void fail(const std::string& key, const std::string& what) {
  throw ConfigError("config: '" + key + "' " + what);
}

/// Strict view of one JSON object: rejects keys outside `allowed`.
class Reader {
 public:
  Reader(const json& obj, std::string path, std::initializer_list<std::string_view> allowed)
      : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) {
      if (path_.empty()) throw ConfigError("config: top level must be an object");
      fail(path_, "must be an object");
    }
    for (const auto& [key, value] : obj_.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
        throw ConfigError("config: unknown key '" + join(path_, key) + "'");
    }
  }

  bool has(std::string_view key) const { return obj_.contains(key); }
  std::string key(std::string_view k) const { return join(path_, k); }
  const json& at(std::string_view k) const { return obj_.at(std::string(k)); }

  double number(std::string_view k, double def) const {
    if (!has(k)) return def;
    const auto& v = at(k);
    if (!v.is_number()) fail(key(k), "must be a number");
    return v.get<double>();
  }

  long long integer(std::string_view k, long long def) const {
    if (!has(k)) return def;
    const auto& v = at(k);
    if (!v.is_number_integer()) fail(key(k), "must be an integer");
    return v.get<long long>();
  }

  std::uint64_t unsigned_integer(std::string_view k, std::uint64_t def) const {
    if (!has(k)) return def;
    const auto& v = at(k);
    if (!v.is_number_unsigned()) fail(key(k), "must be a non-negative integer");
    return v.get<std::uint64_t>();
  }

  bool boolean(std::string_view k, bool def) const {
    if (!has(k)) return def;
    const auto& v = at(k);
    if (!v.is_boolean()) fail(key(k), "must be true or false");
    return v.get<bool>();
  }

  std::string string(std::string_view k, const std::string& def) const {
    if (!has(k)) return def;
    const auto& v = at(k);
    if (!v.is_string()) fail(key(k), "must be a string");
    return v.get<std::string>();
  }

  Eigen::VectorXd vector(std::string_view k, const Eigen::VectorXd& def) const {
    if (!has(k)) return def;
    return to_vector(at(k), key(k));
  }

  static Eigen::VectorXd to_vector(const json& v, const std::string& key) {
    if (!v.is_array()) fail(key, "must be an array of numbers");
    Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) fail(key, "must be an array of numbers");
      out[static_cast<Eigen::Index>(i)] = v[i].get<double>();
    }
    return out;
  }

 private:
  const json& obj_;
  std::string path_;
};

std::size_t positive_size(const Reader& r, std::string_view k, std::size_t def) {
  const auto v = r.integer(k, static_cast<long long>(def));
  if (v < 0) fail(r.key(k), "must be non-negative");
  return static_cast<std::size_t>(v);
}

Well parse_well(const json& doc, const std::string& path) {
  Reader r(doc, path, {"center", "depth", "width"});
  if (!r.has("center")) fail(r.key("center"), "is required");
  Well w;
  w.center = r.vector("center", {});
  w.depth = r.number("depth", 1.0);
  w.width = r.number("width", 1.0);
  return w;
}

std::vector<Well> parse_wells(const json& doc, const std::string& path) {
  if (!doc.is_array()) fail(path, "must be an array of wells");
  std::vector<Well> wells;
  for (std::size_t i = 0; i < doc.size(); ++i)
    wells.push_back(parse_well(doc[i], path + "[" + std::to_string(i) + "]"));
  return wells;
}

json well_json(const Well& w) {
  return {{"center", std::vector<double>(w.center.begin(), w.center.end())},
          {"depth", w.depth},
          {"width", w.width}};
}

json wells_json(const std::vector<Well>& wells) {
  json out = json::array();
  for (const auto& w : wells) out.push_back(well_json(w));
  return out;
}

std::vector<double> as_std(const Eigen::VectorXd& v) { return {v.begin(), v.end()}; }

template <typename Enum>
Enum parse_enum(const Reader& r, std::string_view k, Enum def,
                std::initializer_list<std::pair<std::string_view, Enum>> names) {
  if (!r.has(k)) return def;
  const auto text = r.string(k, "");
  for (const auto& [name, value] : names)
    if (name == text) return value;
  std::string options;
  for (const auto& [name, value] : names) options += (options.empty() ? "" : ", ") + std::string(name);
  fail(r.key(k), "must be one of: " + options);
}

template <typename Enum>
std::string enum_name(Enum value, std::initializer_list<std::pair<std::string_view, Enum>> names) {
  for (const auto& [name, v] : names)
    if (v == value) return std::string(name);
  return "";
}

const std::initializer_list<std::pair<std::string_view, StopKind>> kStopNames = {
    {"budget", StopKind::kBudget}, {"target", StopKind::kTarget}, {"stagnation", StopKind::kStagnation}};
const std::initializer_list<std::pair<std::string_view, ParamKind>> kParamKinds = {
    {"intrinsic", ParamKind::kIntrinsic}, {"extrinsic", ParamKind::kExtrinsic}};
const std::initializer_list<std::pair<std::string_view, Coding>> kCodings = {
    {"binary", Coding::kBinary}, {"gray", Coding::kGray}};
const std::initializer_list<std::pair<std::string_view, LandscapeId>> kLandscapes = {
    {"wells", LandscapeId::kWells},
    {"sphere", LandscapeId::kSphere},
    {"coupled_quadratic", LandscapeId::kCoupledQuadratic},
    {"multi_sphere", LandscapeId::kMultiSphere}};
const std::initializer_list<std::pair<std::string_view, DynamicsKind>> kDynamics = {
    {"static", DynamicsKind::kStatic},
    {"drift", DynamicsKind::kDrift},
    {"rupture", DynamicsKind::kRupture},
    {"catastrophe", DynamicsKind::kCatastrophe}};
const std::initializer_list<std::pair<std::string_view, NoiseMode>> kNoiseModes = {
    {"sinusoidal", NoiseMode::kSinusoidal}, {"white", NoiseMode::kWhite}};

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

GenomeSpec parse_genome(const json& doc) {
  Reader r(doc, "genome", {"coding", "params"});
  const auto coding = parse_enum(r, "coding", Coding::kBinary, kCodings);
  if (!r.has("params")) return GenomeSpec::uniform(2, 0.0, 10.0, 16, coding);
  const auto& list = r.at("params");
  if (!list.is_array()) fail("genome.params", "must be an array");
  std::vector<ParamSpec> params;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "genome.params[" + std::to_string(i) + "]";
    Reader p(list[i], path, {"name", "lo", "hi", "bits", "kind"});
    ParamSpec spec;
    spec.name = p.string("name", "x" + std::to_string(i));
    if (!is_identifier(spec.name)) fail(p.key("name"), "must be an identifier");
    if (!p.has("lo")) fail(p.key("lo"), "is required");
    if (!p.has("hi")) fail(p.key("hi"), "is required");
    spec.lo = p.number("lo", 0.0);
    spec.hi = p.number("hi", 1.0);
    if (!(spec.lo < spec.hi)) fail(path, "needs lo < hi");
    spec.bits = static_cast<int>(p.integer("bits", 16));
    if (spec.bits < 1 || spec.bits > 32) fail(p.key("bits"), "must lie in [1, 32]");
    spec.kind = parse_enum(p, "kind", ParamKind::kIntrinsic, kParamKinds);
    params.push_back(std::move(spec));
  }
  if (params.empty()) fail("genome.params", "must not be empty");
  return GenomeSpec(std::move(params), coding);
}

DynamicsSchedule parse_dynamics(const json& doc, const std::vector<Well>& wells) {
  Reader r(doc, "landscape.dynamics",
           {"kind", "velocity", "well_a", "well_b", "rate", "event_time", "replacement"});
  DynamicsSchedule s;
  s.wells = wells;
  s.replacement = DynamicsSchedule::default_replacement(wells);
  s.kind = parse_enum(r, "kind", DynamicsKind::kStatic, kDynamics);
  s.velocity = r.vector("velocity", s.velocity);
  if (r.has("well_a")) s.well_a = parse_well(r.at("well_a"), r.key("well_a"));
  if (r.has("well_b")) s.well_b = parse_well(r.at("well_b"), r.key("well_b"));
  s.rate = r.number("rate", s.rate);
  s.event_time = static_cast<int>(r.integer("event_time", s.event_time));
  if (r.has("replacement")) s.replacement = parse_wells(r.at("replacement"), r.key("replacement"));
  return s;
}

LandscapeConfig parse_landscape(const json& doc) {
  Reader r(doc, "landscape", {"id", "wells", "center", "centers", "dynamics", "noise"});
  LandscapeConfig cfg;
  cfg.id = parse_enum(r, "id", LandscapeId::kWells, kLandscapes);
  std::vector<Well> wells = canonical_wells();
  if (r.has("wells")) wells = parse_wells(r.at("wells"), "landscape.wells");
  cfg.dynamics.wells = wells;
  cfg.dynamics.replacement = DynamicsSchedule::default_replacement(wells);
  if (r.has("dynamics")) cfg.dynamics = parse_dynamics(r.at("dynamics"), wells);
  cfg.center = r.vector("center", {});
  if (r.has("centers")) {
    const auto& list = r.at("centers");
    if (!list.is_array()) fail("landscape.centers", "must be an array of points");
    for (std::size_t i = 0; i < list.size(); ++i)
      cfg.centers.push_back(Reader::to_vector(list[i], "landscape.centers"));
  }
  if (r.has("noise")) {
    Reader n(r.at("noise"), "landscape.noise", {"amplitude", "wavelength", "mode"});
    cfg.noise.amplitude = n.number("amplitude", cfg.noise.amplitude);
    cfg.noise.wavelength = n.number("wavelength", cfg.noise.wavelength);
    cfg.noise.mode = parse_enum(n, "mode", cfg.noise.mode, kNoiseModes);
  }
  if (cfg.id == LandscapeId::kMultiSphere && cfg.centers.empty())
    fail("landscape.centers", "is required for multi_sphere");
  return cfg;
}

}  // namespace

void validate(const ExperimentConfig& cfg) {
  try {
    cfg.run.validate();
    cfg.pattern.validate();
    if (!(cfg.blockopt.epsilon > 0.0)) fail("blockopt.epsilon", "must be positive");
    if (cfg.blockopt.max_cycles < 1) fail("blockopt.max_cycles", "must be positive");
    const auto landscape =
        make_landscape(cfg.run.landscape, cfg.run.genome, cfg.run.seed, cfg.run.generations);
    if (landscape->objectives() != cfg.run.objectives)
      fail("objectives.k", "differs from the landscape's objective count (" +
                               std::to_string(landscape->objectives()) + ")");
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

ExperimentConfig parse_config(const json& doc) {
  Reader top(doc, "",
             {"seed", "run", "genome", "landscape", "operators", "sharing", "objectives", "blockopt",
              "pattern_search"});
  ExperimentConfig cfg;
  auto& run = cfg.run;
  run.seed = top.unsigned_integer("seed", run.seed);

  if (top.has("run")) {
    Reader r(top.at("run"), "run", {"N", "G", "stop"});
    run.population_size = positive_size(r, "N", run.population_size);
    const auto g = r.integer("G", run.generations);
    if (g < 0) fail("run.G", "must be non-negative");
    run.generations = static_cast<int>(g);
    if (r.has("stop")) {
      Reader s(r.at("stop"), "run.stop", {"kind", "target_cost", "window"});
      run.stop.kind = parse_enum(s, "kind", StopKind::kBudget, kStopNames);
      run.stop.target_cost = s.number("target_cost", run.stop.target_cost);
      run.stop.window = static_cast<int>(s.integer("window", run.stop.window));
    }
  }
  if (top.has("genome")) run.genome = parse_genome(top.at("genome"));
  if (top.has("landscape")) run.landscape = parse_landscape(top.at("landscape"));
  if (top.has("operators")) {
    Reader r(top.at("operators"), "operators",
             {"crossover_prob", "mutations_per_generation", "tournament_win_prob", "elite_count"});
    auto& ops = run.operators;
    ops.crossover_prob = r.number("crossover_prob", ops.crossover_prob);
    ops.mutations_per_generation = r.number("mutations_per_generation", ops.mutations_per_generation);
    ops.tournament_win_prob = r.number("tournament_win_prob", ops.tournament_win_prob);
    ops.elite_count = positive_size(r, "elite_count", ops.elite_count);
  }
  if (top.has("sharing")) {
    Reader r(top.at("sharing"), "sharing", {"enabled", "sigma", "alpha", "beta"});
    auto& sh = run.sharing;
    sh.enabled = r.boolean("enabled", sh.enabled);
    sh.sigma = r.number("sigma", sh.sigma);
    sh.alpha = r.number("alpha", sh.alpha);
    sh.beta = r.number("beta", sh.beta);
  }
  if (top.has("objectives")) {
    Reader r(top.at("objectives"), "objectives", {"k", "weights"});
    run.objectives = positive_size(r, "k", run.objectives);
    run.weights = r.vector("weights", run.weights);
  } else if (run.landscape.id == LandscapeId::kMultiSphere) {
    run.objectives = run.landscape.centers.size();
  }
  if (top.has("blockopt")) {
    Reader r(top.at("blockopt"), "blockopt", {"epsilon", "max_cycles"});
    cfg.blockopt.epsilon = r.number("epsilon", cfg.blockopt.epsilon);
    cfg.blockopt.max_cycles = static_cast<int>(r.integer("max_cycles", cfg.blockopt.max_cycles));
  }
  if (top.has("pattern_search")) {
    Reader r(top.at("pattern_search"), "pattern_search",
             {"initial_step", "shrink", "min_step", "max_evals"});
    auto& ps = cfg.pattern;
    ps.initial_step = r.number("initial_step", ps.initial_step);
    ps.shrink = r.number("shrink", ps.shrink);
    ps.min_step = r.number("min_step", ps.min_step);
    ps.max_evals = r.integer("max_evals", ps.max_evals);
  }
  validate(cfg);
  return cfg;
}

ExperimentConfig parse_config_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: malformed document: ") + e.what());
  }
  return parse_config(doc);
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

json to_json(const ExperimentConfig& cfg) {
  const auto& run = cfg.run;
  json params = json::array();
  for (const auto& p : run.genome.params())
    params.push_back({{"name", p.name},
                      {"lo", p.lo},
                      {"hi", p.hi},
                      {"bits", p.bits},
                      {"kind", enum_name(p.kind, kParamKinds)}});
  const auto& ls = run.landscape;
  const auto& dyn = ls.dynamics;
  json centers = json::array();
  for (const auto& c : ls.centers) centers.push_back(as_std(c));
  json landscape = {
      {"id", enum_name(ls.id, kLandscapes)},
      {"wells", wells_json(dyn.wells)},
      {"dynamics",
       {{"kind", enum_name(dyn.kind, kDynamics)},
        {"velocity", as_std(dyn.velocity)},
        {"well_a", well_json(dyn.well_a)},
        {"well_b", well_json(dyn.well_b)},
        {"rate", dyn.rate},
        {"event_time", dyn.event_time},
        {"replacement", wells_json(dyn.replacement)}}},
      {"noise",
       {{"amplitude", ls.noise.amplitude},
        {"wavelength", ls.noise.wavelength},
        {"mode", enum_name(ls.noise.mode, kNoiseModes)}}},
  };
  if (ls.center.size() > 0) landscape["center"] = as_std(ls.center);
  if (!ls.centers.empty()) landscape["centers"] = centers;
  json objectives = {{"k", run.objectives}};
  if (run.weights.size() > 0) objectives["weights"] = as_std(run.weights);
  return {
      {"seed", run.seed},
      {"run",
       {{"N", run.population_size},
        {"G", run.generations},
        {"stop",
         {{"kind", enum_name(run.stop.kind, kStopNames)},
          {"target_cost", run.stop.target_cost},
          {"window", run.stop.window}}}}},
      {"genome", {{"coding", enum_name(run.genome.coding(), kCodings)}, {"params", params}}},
      {"landscape", landscape},
      {"operators",
       {{"crossover_prob", run.operators.crossover_prob},
        {"mutations_per_generation", run.operators.mutations_per_generation},
        {"tournament_win_prob", run.operators.tournament_win_prob},
        {"elite_count", run.operators.elite_count}}},
      {"sharing",
       {{"enabled", run.sharing.enabled},
        {"sigma", run.sharing.sigma},
        {"alpha", run.sharing.alpha},
        {"beta", run.sharing.beta}}},
      {"objectives", objectives},
      {"blockopt", {{"epsilon", cfg.blockopt.epsilon}, {"max_cycles", cfg.blockopt.max_cycles}}},
      {"pattern_search",
       {{"initial_step", cfg.pattern.initial_step},
        {"shrink", cfg.pattern.shrink},
        {"min_step", cfg.pattern.min_step},
        {"max_evals", cfg.pattern.max_evals}}},
  };
}

}  // namespace genopt::cli

#include "genopt/landscapes.hpp"

#include <algorithm>

#include "genopt/errors.hpp"
#include "genopt/random.hpp"

namespace genopt {

std::size_t deepest_well(std::span<const Well> wells) {
  if (wells.empty()) throw DomainError("wells: empty well list");
  std::size_t best = 0;
  for (std::size_t i = 1; i < wells.size(); ++i)
    if (wells[i].depth > wells[best].depth) best = i;
  return best;
}

std::vector<Well> canonical_wells() {
  return {
      {Eigen::Vector2d(7.5, 7.5), 4.0, 0.9},
      {Eigen::Vector2d(2.0, 2.0), 3.0, 0.9},
      {Eigen::Vector2d(2.0, 8.0), 2.5, 0.9},
      {Eigen::Vector2d(8.0, 2.0), 2.0, 0.9},
  };
}

void NoiseConfig::validate() const {
  if (!(amplitude >= 0.0)) throw DomainError("noise: amplitude must be non-negative");
  if (!(wavelength > 0.0)) throw DomainError("noise: wavelength must be positive");
}

Eigen::VectorXd noise_phases(std::size_t dims, std::uint64_t seed) {
  Rng rng(derive_key(seed, 0, 0, Purpose::kNoisePhase));
  Eigen::VectorXd phases(static_cast<Eigen::Index>(dims));
  for (auto& p : phases) p = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return phases;
}

std::vector<Well> DynamicsSchedule::default_replacement(const std::vector<Well>& before) {
  std::vector<Well> after = before;
  for (auto& w : after) w.depth *= 0.5;
  after.push_back({Eigen::Vector2d(1.0, 9.0), 4.0, 1.5});
  return after;
}

double DynamicsSchedule::rupture_crossing() const {
  return (well_a.depth - well_b.depth) / (2.0 * rate);
}

namespace {

void check_wells(const std::vector<Well>& wells, const Eigen::VectorXd& lower,
                 const Eigen::VectorXd& upper, const char* what) {
  for (const auto& w : wells) {
    if (w.center.size() != lower.size())
      throw DomainError(std::string(what) + ": well center dimension differs from the genome");
    if (!(w.depth > 0.0) || !(w.width > 0.0))
      throw DomainError(std::string(what) + ": well depth and width must be positive");
    if ((w.center.array() < lower.array()).any() || (w.center.array() > upper.array()).any())
      throw DomainError(std::string(what) + ": well center lies outside the box");
  }
}

}  // namespace

void DynamicsSchedule::validate(const Eigen::VectorXd& lower, const Eigen::VectorXd& upper,
                                int horizon) const {
  switch (kind) {
    case DynamicsKind::kStatic:
      if (wells.empty()) throw DomainError("landscape: empty well list");
      check_wells(wells, lower, upper, "landscape");
      break;
    case DynamicsKind::kDrift:
      if (wells.empty()) throw DomainError("landscape: empty well list");
      check_wells(wells, lower, upper, "landscape");
      if (velocity.size() != lower.size())
        throw DomainError("dynamics: velocity dimension differs from the genome");
      break;
    case DynamicsKind::kRupture:
      check_wells({well_a, well_b}, lower, upper, "dynamics");
      if (!(rate >= 0.0)) throw DomainError("dynamics: rupture rate must be non-negative");
      if (well_a.depth - rate * horizon < 0.0)
        throw DomainError("dynamics: rupture ramp drives depth A below zero within the horizon");
      break;
    case DynamicsKind::kCatastrophe:
      if (wells.empty() || replacement.empty())
        throw DomainError("dynamics: catastrophe needs both well sets");
      check_wells(wells, lower, upper, "landscape");
      check_wells(replacement, lower, upper, "dynamics");
      break;
  }
}

double reflect_into(double value, double lo, double hi) {
  const double span = hi - lo;
  double y = std::fmod(value - lo, 2.0 * span);
  if (y < 0.0) y += 2.0 * span;
  if (y > span) y = 2.0 * span - y;
  return lo + y;
}

std::vector<Well> DynamicsSchedule::wells_at(int t, const Eigen::VectorXd& lower,
                                             const Eigen::VectorXd& upper) const {
  switch (kind) {
    case DynamicsKind::kStatic:
      return wells;
    case DynamicsKind::kDrift: {
      std::vector<Well> moved = wells;
      for (auto& w : moved)
        for (Eigen::Index j = 0; j < w.center.size(); ++j)
          w.center[j] = reflect_into(w.center[j] + t * velocity[j], lower[j], upper[j]);
      return moved;
    }
    case DynamicsKind::kRupture: {
      Well a = well_a;
      Well b = well_b;
      a.depth = std::max(0.0, well_a.depth - rate * t);
      b.depth = well_b.depth + rate * t;
      return {a, b};
    }
    case DynamicsKind::kCatastrophe:
      return t < event_time ? wells : replacement;
  }
  return wells;
}

double dynamic_eval(const DynamicsSchedule& sched, const Eigen::Ref<const Eigen::VectorXd>& x,
                    int t, const Eigen::VectorXd& lower, const Eigen::VectorXd& upper) {
  if (sched.kind == DynamicsKind::kStatic) return wells_eval(sched.wells, x);
  if (sched.kind == DynamicsKind::kCatastrophe)
    return wells_eval(t < sched.event_time ? sched.wells : sched.replacement, x);
  return wells_eval(sched.wells_at(t, lower, upper), x);
}

WellsLandscape::WellsLandscape(DynamicsSchedule schedule, const GenomeSpec& genome)
    : schedule_(std::move(schedule)), lower_(genome.lower()), upper_(genome.upper()) {}

Eigen::VectorXd WellsLandscape::evaluate(const Eigen::Ref<const Eigen::VectorXd>& x, int t,
                                         std::uint64_t) const {
  return Eigen::VectorXd::Constant(1, dynamic_eval(schedule_, x, t, lower_, upper_));
}

std::vector<Well> WellsLandscape::wells_at(int t) const {
  return schedule_.wells_at(t, lower_, upper_);
}

std::optional<Eigen::VectorXd> WellsLandscape::global_center(int t) const {
  const auto wells = wells_at(t);
  return wells[deepest_well(wells)].center;
}

Eigen::VectorXd SphereLandscape::evaluate(const Eigen::Ref<const Eigen::VectorXd>& x, int,
                                          std::uint64_t) const {
  if (x.size() != center_.size()) throw StructuralError("sphere: dimension mismatch");
  return Eigen::VectorXd::Constant(1, (x - center_).squaredNorm());
}

Eigen::VectorXd CoupledQuadratic::evaluate(const Eigen::Ref<const Eigen::VectorXd>& x, int,
                                           std::uint64_t) const {
  if (x.size() != 2) throw StructuralError("coupled quadratic: needs two parameters");
  const double d = x[0] - x[1];
  const double s = x[0] + x[1] - 4.0;
  return Eigen::VectorXd::Constant(1, d * d + 0.1 * s * s);
}

MultiSphere::MultiSphere(std::vector<Eigen::VectorXd> centers) : centers_(std::move(centers)) {
  if (centers_.empty()) throw DomainError("multi-sphere: needs at least one center");
}

Eigen::VectorXd MultiSphere::evaluate(const Eigen::Ref<const Eigen::VectorXd>& x, int,
                                      std::uint64_t) const {
  Eigen::VectorXd out(static_cast<Eigen::Index>(centers_.size()));
  for (std::size_t i = 0; i < centers_.size(); ++i) {
    if (x.size() != centers_[i].size()) throw StructuralError("multi-sphere: dimension mismatch");
    out[static_cast<Eigen::Index>(i)] = (x - centers_[i]).squaredNorm();
  }
  return out;
}

NoisyLandscape::NoisyLandscape(LandscapePtr base, NoiseConfig noise, std::size_t dims,
                               std::uint64_t seed)
    : base_(std::move(base)), noise_(noise), phases_(noise_phases(dims, seed)) {
  noise_.validate();
  if (base_->objectives() != 1)
    throw UnsupportedConfigError("noise: only single-objective landscapes take noise");
}

Eigen::VectorXd NoisyLandscape::evaluate(const Eigen::Ref<const Eigen::VectorXd>& x, int t,
                                         std::uint64_t eval_key) const {
  return Eigen::VectorXd::Constant(1, noisy_eval(*base_, noise_, phases_, x, t, eval_key));
}

double noisy_eval(const Landscape& base, const NoiseConfig& noise,
                  const Eigen::Ref<const Eigen::VectorXd>& phases,
                  const Eigen::Ref<const Eigen::VectorXd>& x, int t, std::uint64_t eval_key) {
  const double value = base.evaluate(x, t, eval_key)[0];
  if (!noise.active()) return value;
  if (noise.mode == NoiseMode::kWhite) {
    Rng rng(eval_key);
    return value + noise.amplitude * rng.uniform(-1.0, 1.0);
  }
  return value + sinusoidal_noise(noise, phases, x);
}

}  // namespace genopt

namespace genopt {

LandscapePtr make_landscape(const LandscapeConfig& cfg, const GenomeSpec& genome,
                            std::uint64_t seed, int horizon) {
  const auto p = static_cast<Eigen::Index>(genome.size());
  LandscapePtr base;
  switch (cfg.id) {
    case LandscapeId::kWells:
      cfg.dynamics.validate(genome.lower(), genome.upper(), horizon);
      base = std::make_shared<WellsLandscape>(cfg.dynamics, genome);
      break;
    case LandscapeId::kSphere: {
      Eigen::VectorXd c = cfg.center.size() == 0 ? Eigen::VectorXd::Zero(p) : cfg.center;
      if (c.size() != p) throw DomainError("landscape: sphere center dimension differs");
      base = std::make_shared<SphereLandscape>(std::move(c));
      break;
    }
    case LandscapeId::kCoupledQuadratic:
      if (p != 2) throw DomainError("landscape: coupled_quadratic needs exactly two parameters");
      base = std::make_shared<CoupledQuadratic>();
      break;
    case LandscapeId::kMultiSphere:
      for (const auto& c : cfg.centers)
        if (c.size() != p) throw DomainError("landscape: multi_sphere center dimension differs");
      base = std::make_shared<MultiSphere>(cfg.centers);
      break;
  }
  if (cfg.id != LandscapeId::kWells && cfg.dynamics.kind != DynamicsKind::kStatic)
    throw UnsupportedConfigError("landscape: dynamics apply to the wells landscape only");
  cfg.noise.validate();
  if (cfg.noise.active())
    return std::make_shared<NoisyLandscape>(base, cfg.noise, genome.size(), seed);
  return base;
}

}  // namespace genopt

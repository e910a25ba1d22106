#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "genopt/genome.hpp"

namespace genopt {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Gaussian well: contributes -depth * exp(-|x - center|^2 / (2 width^2)).
template <typename Scalar>
struct WellT {
  VectorX<Scalar> center;
  Scalar depth{1};
  Scalar width{1};
};

using Well = WellT<double>;

/// F(x) = -sum_i d_i exp(-|x - c_i|^2 / (2 s_i^2)).
template <typename Derived>
typename Derived::Scalar wells_eval(std::span<const WellT<typename Derived::Scalar>> wells,
                                    const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  Scalar value(0);
  for (const auto& w : wells) {
    const Scalar r2 = (x - w.center).squaredNorm();
    value -= w.depth * std::exp(-r2 / (Scalar(2) * w.width * w.width));
  }
  return value;
}

template <typename Derived>
typename Derived::Scalar wells_eval(const std::vector<WellT<typename Derived::Scalar>>& wells,
                                    const Eigen::MatrixBase<Derived>& x) {
  return wells_eval(std::span<const WellT<typename Derived::Scalar>>(wells), x);
}

/// Index of the deepest well; ties go to the lower index.
std::size_t deepest_well(std::span<const Well> wells);

/// Box [0,10]^2, width 0.9: global (7.5,7.5)/4.0, locals (2,2)/3.0, (2,8)/2.5, (8,2)/2.0.
std::vector<Well> canonical_wells();

enum class NoiseMode {
  /// Run-fixed sinusoidal corrugation A * prod_j sin(2 pi x_j / wavelength + phase_j).
  kSinusoidal,
  /// Independent uniform draw in [-A, A] per evaluation.
  kWhite,
};

struct NoiseConfig {
  double amplitude = 0.0;
  double wavelength = 0.5;
  NoiseMode mode = NoiseMode::kSinusoidal;

  bool active() const { return amplitude > 0.0; }
  void validate() const;
};

/// Phases drawn once per run, uniform in [0, 2 pi).
Eigen::VectorXd noise_phases(std::size_t dims, std::uint64_t seed);

/// A * prod_j sin(2 pi x_j / wavelength + phase_j).
template <typename Derived>
typename Derived::Scalar sinusoidal_noise(const NoiseConfig& noise,
                                          const Eigen::Ref<const Eigen::VectorXd>& phases,
                                          const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  Scalar prod(1);
  for (Eigen::Index j = 0; j < x.size(); ++j)
    prod *= std::sin(Scalar(2 * std::numbers::pi) * x[j] / noise.wavelength + phases[j]);
  return noise.amplitude * prod;
}

enum class DynamicsKind { kStatic, kDrift, kRupture, kCatastrophe };

/// Time dependence of a well landscape. Generations are the time unit.
struct DynamicsSchedule {
  DynamicsKind kind = DynamicsKind::kStatic;
  /// Wells for static and drift; the pre-event set for catastrophe.
  std::vector<Well> wells = canonical_wells();

  /// drift: per-generation velocity of every center, reflected at the box walls.
  Eigen::VectorXd velocity = Eigen::Vector2d(0.02, 0.01);

  /// rupture: depth(A) = depth_A0 - rate t, depth(B) = depth_B0 + rate t.
  Well well_a{Eigen::Vector2d(3.0, 5.0), 4.0, 1.5};
  Well well_b{Eigen::Vector2d(7.0, 5.0), 2.0, 1.5};
  double rate = 0.02;

  /// catastrophe: `wells` before event_time, `replacement` from event_time on.
  int event_time = 60;
  std::vector<Well> replacement = default_replacement(canonical_wells());

  /// Pre-event wells at half depth plus a new global well at (1, 9), depth 4, width 1.5.
  static std::vector<Well> default_replacement(const std::vector<Well>& before);

  /// Generation at which the rupture depths are equal.
  double rupture_crossing() const;

  /// Throws DomainError on inconsistent fields. `horizon` is the last generation evaluated.
  void validate(const Eigen::VectorXd& lower, const Eigen::VectorXd& upper, int horizon) const;

  /// Well set in force at generation t.
  std::vector<Well> wells_at(int t, const Eigen::VectorXd& lower,
                             const Eigen::VectorXd& upper) const;
};

/// Folds `value` into [lo, hi] by mirror reflection at both walls.
double reflect_into(double value, double lo, double hi);

/// Value of the scheduled well landscape at (x, t).
double dynamic_eval(const DynamicsSchedule& sched, const Eigen::Ref<const Eigen::VectorXd>& x,
                    int t, const Eigen::VectorXd& lower, const Eigen::VectorXd& upper);

/// Black-box objective over the parameter box; deterministic given (x, t, eval_key).
class Landscape {
 public:
  virtual ~Landscape() = default;

  /// Objective count k.
  virtual std::size_t objectives() const { return 1; }
  virtual Eigen::VectorXd evaluate(const Eigen::Ref<const Eigen::VectorXd>& x, int t,
                                   std::uint64_t eval_key) const = 0;
  virtual bool time_varying() const { return false; }
  virtual bool noisy() const { return false; }
  /// Wells in force at t, empty when the landscape is not a well mixture.
  virtual std::vector<Well> wells_at(int /*t*/) const { return {}; }
  /// Location of the global optimum at t, when known.
  virtual std::optional<Eigen::VectorXd> global_center(int /*t*/) const { return std::nullopt; }
};

using LandscapePtr = std::shared_ptr<const Landscape>;

class WellsLandscape final : public Landscape {
 public:
  WellsLandscape(DynamicsSchedule schedule, const GenomeSpec& genome);

  Eigen::VectorXd evaluate(const Eigen::Ref<const Eigen::VectorXd>& x, int t,
                           std::uint64_t eval_key) const override;
  bool time_varying() const override { return schedule_.kind != DynamicsKind::kStatic; }
  std::vector<Well> wells_at(int t) const override;
  std::optional<Eigen::VectorXd> global_center(int t) const override;

  const DynamicsSchedule& schedule() const { return schedule_; }

 private:
  DynamicsSchedule schedule_;
  Eigen::VectorXd lower_;
  Eigen::VectorXd upper_;
};

/// sum_j (x_j - c_j)^2.
class SphereLandscape final : public Landscape {
 public:
  explicit SphereLandscape(Eigen::VectorXd center) : center_(std::move(center)) {}
  Eigen::VectorXd evaluate(const Eigen::Ref<const Eigen::VectorXd>& x, int t,
                           std::uint64_t eval_key) const override;
  std::optional<Eigen::VectorXd> global_center(int) const override { return center_; }

 private:
  Eigen::VectorXd center_;
};

/// (x - y)^2 + 0.1 (x + y - 4)^2, minimum 0 at (2, 2).
class CoupledQuadratic final : public Landscape {
 public:
  Eigen::VectorXd evaluate(const Eigen::Ref<const Eigen::VectorXd>& x, int t,
                           std::uint64_t eval_key) const override;
  std::optional<Eigen::VectorXd> global_center(int) const override {
    return Eigen::Vector2d(2.0, 2.0);
  }
};

/// Objective i = |x - c_i|^2. Two centers 0 and 2 in one dimension give min(x^2, (x-2)^2).
class MultiSphere final : public Landscape {
 public:
  explicit MultiSphere(std::vector<Eigen::VectorXd> centers);
  std::size_t objectives() const override { return centers_.size(); }
  Eigen::VectorXd evaluate(const Eigen::Ref<const Eigen::VectorXd>& x, int t,
                           std::uint64_t eval_key) const override;

 private:
  std::vector<Eigen::VectorXd> centers_;
};

/// Adds noise to a single-objective base landscape.
class NoisyLandscape final : public Landscape {
 public:
  NoisyLandscape(LandscapePtr base, NoiseConfig noise, std::size_t dims, std::uint64_t seed);

  Eigen::VectorXd evaluate(const Eigen::Ref<const Eigen::VectorXd>& x, int t,
                           std::uint64_t eval_key) const override;
  bool time_varying() const override { return base_->time_varying(); }
  bool noisy() const override { return true; }
  std::vector<Well> wells_at(int t) const override { return base_->wells_at(t); }
  std::optional<Eigen::VectorXd> global_center(int t) const override {
    return base_->global_center(t);
  }

  const Eigen::VectorXd& phases() const { return phases_; }

 private:
  LandscapePtr base_;
  NoiseConfig noise_;
  Eigen::VectorXd phases_;
};

/// Wraps an arbitrary static objective; handy for tests and ad-hoc problems.
class FunctionLandscape final : public Landscape {
 public:
  using Fn = std::function<Eigen::VectorXd(const Eigen::VectorXd&, int)>;
  FunctionLandscape(Fn fn, std::size_t k, bool time_varying = false)
      : fn_(std::move(fn)), k_(k), time_varying_(time_varying) {}
  std::size_t objectives() const override { return k_; }
  Eigen::VectorXd evaluate(const Eigen::Ref<const Eigen::VectorXd>& x, int t,
                           std::uint64_t) const override {
    return fn_(Eigen::VectorXd(x), t);
  }
  bool time_varying() const override { return time_varying_; }

 private:
  Fn fn_;
  std::size_t k_;
  bool time_varying_;
};

/// Value of `noise` at x on top of `base` (k = 1); white mode draws from eval_key.
double noisy_eval(const Landscape& base, const NoiseConfig& noise,
                  const Eigen::Ref<const Eigen::VectorXd>& phases,
                  const Eigen::Ref<const Eigen::VectorXd>& x, int t, std::uint64_t eval_key);

}  // namespace genopt

namespace genopt {

enum class LandscapeId { kWells, kSphere, kCoupledQuadratic, kMultiSphere };

/// Declarative landscape selection, as carried by a run configuration.
struct LandscapeConfig {
  LandscapeId id = LandscapeId::kWells;
  /// Wells and their time dependence (wells landscape only).
  DynamicsSchedule dynamics;
  /// Sphere center; empty means the origin.
  Eigen::VectorXd center;
  /// Multi-sphere centers, one per objective.
  std::vector<Eigen::VectorXd> centers;
  NoiseConfig noise;
};

/// Builds the landscape for one run. Noise phases are drawn from `seed`; `horizon`
/// is the last generation the run may evaluate. Throws DomainError or
/// UnsupportedConfigError on inconsistent settings.
LandscapePtr make_landscape(const LandscapeConfig& cfg, const GenomeSpec& genome,
                            std::uint64_t seed, int horizon);

}  // namespace genopt

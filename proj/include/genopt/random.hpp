#pragma once

#include <cstdint>
#include <random>

namespace genopt {

/// Tags separating the independent random streams used by one run.
enum class Purpose : std::uint64_t {
  kInit = 1,
  kPairing = 2,
  kMutation = 3,
  kElimination = 4,
  kEvaluation = 5,
  kNoisePhase = 6,
  kIncumbent = 7,
  kBlockRun = 8,
  kStart = 9,
};

/// Stateless 64-bit finalizer (splitmix64).
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Stream key as a pure function of (master seed, generation, slot, purpose).
std::uint64_t derive_key(std::uint64_t seed, std::uint64_t generation, std::uint64_t slot,
                         Purpose purpose) noexcept;

/// Small wrapper over a 64-bit Mersenne twister with the draws the library needs.
class Rng {
 public:
  explicit Rng(std::uint64_t key) : engine_(mix64(key)) {}

  /// Uniform in [0, 1) with 53 bits of resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t index(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
  }

  bool bit() { return (engine_() >> 63) != 0; }

  bool bernoulli(double p) { return uniform() < p; }

  std::uint64_t poisson(double mean) {
    if (mean <= 0.0) return 0;
    return std::poisson_distribution<std::uint64_t>(mean)(engine_);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace genopt

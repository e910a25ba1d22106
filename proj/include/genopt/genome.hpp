#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace genopt {

struct Population;

/// Intrinsic parameters describe the object itself; extrinsic ones describe its
/// environment and are the ones a changing landscape may act on.
enum class ParamKind { kIntrinsic, kExtrinsic };

struct ParamSpec {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  int bits = 16;
  ParamKind kind = ParamKind::kIntrinsic;
};

/// How a gene's bits map to its quantization level.
enum class Coding {
  /// Level is the big-endian unsigned integer of the bits.
  kBinary,
  /// Bits hold the reflected Gray code of the level; neighbouring levels differ by one bit.
  kGray,
};

/// Ordered parameter list; genes are concatenated in this order, each big-endian.
class GenomeSpec {
 public:
  GenomeSpec() = default;
  /// Throws DomainError on an empty list, lo >= hi, or a width outside [1, 32].
  explicit GenomeSpec(std::vector<ParamSpec> params, Coding coding = Coding::kBinary);

  /// `count` identical parameters named x0, x1, ...
  static GenomeSpec uniform(std::size_t count, double lo, double hi, int bits,
                            Coding coding = Coding::kBinary);

  Coding coding() const { return coding_; }

  const std::vector<ParamSpec>& params() const { return params_; }
  const ParamSpec& param(std::size_t j) const { return params_[j]; }
  std::size_t size() const { return params_.size(); }
  std::size_t total_bits() const { return total_bits_; }
  std::size_t offset(std::size_t j) const { return offsets_[j]; }

  Eigen::VectorXd lower() const;
  Eigen::VectorXd upper() const;
  Eigen::VectorXd range() const { return upper() - lower(); }
  /// Decode step (hi - lo) / (2^bits - 1) per parameter.
  Eigen::VectorXd quantum() const;

  /// Sub-genome made of the listed parameters, in the listed order.
  GenomeSpec select(const std::vector<std::size_t>& indices) const;

 private:
  std::vector<ParamSpec> params_;
  Coding coding_ = Coding::kBinary;
  std::vector<std::size_t> offsets_;
  std::size_t total_bits_ = 0;
};

class Chromosome {
 public:
  Chromosome() = default;
  explicit Chromosome(std::size_t length, bool value = false) : bits_(length, value ? 1 : 0) {}

  /// Parses a string of '0'/'1'; throws StructuralError on any other character.
  static Chromosome from_string(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool v) { bits_[i] = v ? 1 : 0; }
  void flip(std::size_t i) { bits_[i] ^= 1; }

  std::string to_string() const;

  friend bool operator==(const Chromosome&, const Chromosome&) = default;
  friend auto operator<=>(const Chromosome&, const Chromosome&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Pattern over {0, 1, *}.
class Schema {
 public:
  enum class Symbol : std::uint8_t { kZero, kOne, kAny };

  Schema() = default;
  explicit Schema(std::vector<Symbol> pattern) : pattern_(std::move(pattern)) {}
  /// Parses "01*"; throws StructuralError on any other character.
  static Schema from_string(std::string_view text);

  std::size_t size() const { return pattern_.size(); }
  /// Number of fixed positions.
  std::size_t order() const;
  Symbol operator[](std::size_t i) const { return pattern_[i]; }

  /// Throws StructuralError on length mismatch.
  bool matches(const Chromosome& c) const;

 private:
  std::vector<Symbol> pattern_;
};

/// Unsigned big-endian integer held by gene j's bits.
std::uint64_t gene_value(const GenomeSpec& spec, const Chromosome& c, std::size_t j);

/// Quantization level u_j of gene j (equals gene_value under binary coding).
std::uint64_t gene_level(const GenomeSpec& spec, const Chromosome& c, std::size_t j);

std::uint64_t gray_encode(std::uint64_t level) noexcept;
std::uint64_t gray_decode(std::uint64_t code) noexcept;

/// x_j = lo_j + u_j / (2^bits_j - 1) * (hi_j - lo_j), u_j the level of gene j.
Eigen::VectorXd decode(const GenomeSpec& spec, const Chromosome& c);

/// Nearest-level quantization (ties toward +inf). Throws DomainError outside the box.
Chromosome encode(const GenomeSpec& spec, const Eigen::Ref<const Eigen::VectorXd>& x);

/// Maps a point of the box onto the unit cube.
Eigen::VectorXd normalize(const GenomeSpec& spec, const Eigen::Ref<const Eigen::VectorXd>& x);

/// Count of chromosomes matching every fixed position of the schema.
std::size_t schema_count(const std::vector<Chromosome>& chromosomes, const Schema& s);
std::size_t schema_count(const Population& pop, const Schema& s);

}  // namespace genopt

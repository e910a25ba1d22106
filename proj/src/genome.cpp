#include "genopt/genome.hpp"

#include <algorithm>
#include <cmath>

#include "genopt/errors.hpp"
#include "genopt/population.hpp"

namespace genopt {

namespace {

double max_level(int bits) { return std::ldexp(1.0, bits) - 1.0; }

}  // namespace

GenomeSpec::GenomeSpec(std::vector<ParamSpec> params, Coding coding)
    : params_(std::move(params)), coding_(coding) {
  if (params_.empty()) throw DomainError("genome: parameter list is empty");
  offsets_.reserve(params_.size());
  for (const auto& p : params_) {
    if (!(p.lo < p.hi)) throw DomainError("genome: parameter '" + p.name + "' needs lo < hi");
    if (p.bits < 1 || p.bits > 32)
      throw DomainError("genome: parameter '" + p.name + "' needs 1 <= bits <= 32");
    offsets_.push_back(total_bits_);
    total_bits_ += static_cast<std::size_t>(p.bits);
  }
}

GenomeSpec GenomeSpec::uniform(std::size_t count, double lo, double hi, int bits,
                               Coding coding) {
  std::vector<ParamSpec> params;
  for (std::size_t j = 0; j < count; ++j)
    params.push_back({"x" + std::to_string(j), lo, hi, bits, ParamKind::kIntrinsic});
  return GenomeSpec(std::move(params), coding);
}

Eigen::VectorXd GenomeSpec::lower() const {
  Eigen::VectorXd v(size());
  for (std::size_t j = 0; j < size(); ++j) v[j] = params_[j].lo;
  return v;
}

Eigen::VectorXd GenomeSpec::upper() const {
  Eigen::VectorXd v(size());
  for (std::size_t j = 0; j < size(); ++j) v[j] = params_[j].hi;
  return v;
}

Eigen::VectorXd GenomeSpec::quantum() const {
  Eigen::VectorXd v(size());
  for (std::size_t j = 0; j < size(); ++j)
    v[j] = (params_[j].hi - params_[j].lo) / max_level(params_[j].bits);
  return v;
}

GenomeSpec GenomeSpec::select(const std::vector<std::size_t>& indices) const {
  std::vector<ParamSpec> sub;
  for (auto j : indices) {
    if (j >= size()) throw StructuralError("genome: parameter index out of range");
    sub.push_back(params_[j]);
  }
  return GenomeSpec(std::move(sub), coding_);
}

Chromosome Chromosome::from_string(std::string_view text) {
  Chromosome c(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') c.set(i, true);
    else if (text[i] != '0') throw StructuralError("chromosome: expected '0' or '1'");
  }
  return c;
}

std::string Chromosome::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) s[i] = '1';
  return s;
}

Schema Schema::from_string(std::string_view text) {
  std::vector<Symbol> pattern;
  pattern.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case '0': pattern.push_back(Symbol::kZero); break;
      case '1': pattern.push_back(Symbol::kOne); break;
      case '*': pattern.push_back(Symbol::kAny); break;
      default: throw StructuralError("schema: expected '0', '1' or '*'");
    }
  }
  return Schema(std::move(pattern));
}

std::size_t Schema::order() const {
  std::size_t n = 0;
  for (auto s : pattern_)
    if (s != Symbol::kAny) ++n;
  return n;
}

bool Schema::matches(const Chromosome& c) const {
  if (c.size() != pattern_.size()) throw StructuralError("schema: length mismatch");
  for (std::size_t i = 0; i < pattern_.size(); ++i) {
    if (pattern_[i] == Symbol::kAny) continue;
    if (c[i] != (pattern_[i] == Symbol::kOne)) return false;
  }
  return true;
}

std::uint64_t gene_value(const GenomeSpec& spec, const Chromosome& c, std::size_t j) {
  if (c.size() != spec.total_bits()) throw StructuralError("decode: chromosome length mismatch");
  std::uint64_t u = 0;
  const auto start = spec.offset(j);
  for (int b = 0; b < spec.param(j).bits; ++b) u = (u << 1) | (c[start + b] ? 1u : 0u);
  return u;
}

std::uint64_t gray_encode(std::uint64_t level) noexcept { return level ^ (level >> 1); }

std::uint64_t gray_decode(std::uint64_t code) noexcept {
  for (std::uint64_t shift = code >> 1; shift != 0; shift >>= 1) code ^= shift;
  return code;
}

std::uint64_t gene_level(const GenomeSpec& spec, const Chromosome& c, std::size_t j) {
  const auto raw = gene_value(spec, c, j);
  return spec.coding() == Coding::kGray ? gray_decode(raw) : raw;
}

Eigen::VectorXd decode(const GenomeSpec& spec, const Chromosome& c) {
  if (c.size() != spec.total_bits()) throw StructuralError("decode: chromosome length mismatch");
  Eigen::VectorXd x(spec.size());
  for (std::size_t j = 0; j < spec.size(); ++j) {
    const auto& p = spec.param(j);
    const double u = static_cast<double>(gene_level(spec, c, j));
    x[j] = p.lo + u / max_level(p.bits) * (p.hi - p.lo);
    // guard against rounding past hi when u is the top level
    if (x[j] > p.hi) x[j] = p.hi;
  }
  return x;
}

Chromosome encode(const GenomeSpec& spec, const Eigen::Ref<const Eigen::VectorXd>& x) {
  if (static_cast<std::size_t>(x.size()) != spec.size())
    throw StructuralError("encode: vector length mismatch");
  Chromosome c(spec.total_bits());
  for (std::size_t j = 0; j < spec.size(); ++j) {
    const auto& p = spec.param(j);
    if (!(x[j] >= p.lo && x[j] <= p.hi))
      throw DomainError("encode: value of '" + p.name + "' outside [lo, hi]");
    const double top = max_level(p.bits);
    double level = std::floor((x[j] - p.lo) / (p.hi - p.lo) * top + 0.5);
    level = std::clamp(level, 0.0, top);
    auto u = static_cast<std::uint64_t>(level);
    if (spec.coding() == Coding::kGray) u = gray_encode(u);
    const auto start = spec.offset(j);
    for (int b = p.bits - 1; b >= 0; --b, u >>= 1) c.set(start + b, (u & 1u) != 0);
  }
  return c;
}

Eigen::VectorXd normalize(const GenomeSpec& spec, const Eigen::Ref<const Eigen::VectorXd>& x) {
  return ((x - spec.lower()).array() / spec.range().array()).matrix();
}

std::size_t schema_count(const std::vector<Chromosome>& chromosomes, const Schema& s) {
  std::size_t n = 0;
  for (const auto& c : chromosomes)
    if (s.matches(c)) ++n;
  return n;
}

std::size_t schema_count(const Population& pop, const Schema& s) {
  std::size_t n = 0;
  for (const auto& ind : pop.members)
    if (s.matches(ind.chromosome)) ++n;
  return n;
}

}  // namespace genopt

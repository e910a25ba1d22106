#pragma once

#include <stdexcept>
#include <string>

namespace genopt {

/// Shape or length mismatch between related values (chromosome vs spec, crossover site, ...).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value lies outside the domain an operation accepts.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An object is not in the state an operation requires (e.g. unevaluated individual).
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The requested combination of features is not supported.
class UnsupportedConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Objective evaluation failed; the message carries generation context.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(int generation, const std::string& what)
      : std::runtime_error("generation " + std::to_string(generation) + ": " + what),
        generation_(generation) {}

  int generation() const noexcept { return generation_; }

 private:
  int generation_;
};

}  // namespace genopt

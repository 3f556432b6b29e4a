#pragma once

#include <stdexcept>
#include <string>

namespace extropy {

/// Invalid distribution or transform parameters (rejected at construction).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The distribution has no finite mean (e.g. shifted Pareto with shape <= 1).
class InfiniteMeanError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A truncation window carries no probability mass, or is otherwise degenerate.
class WindowError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adaptive quadrature failed to reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double error_estimate)
      : std::runtime_error(what), error_estimate_(error_estimate) {}

  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double error_estimate_;
};

/// The integrand returned NaN at `abscissa`.
class EvaluationError : public std::runtime_error {
 public:
  explicit EvaluationError(double abscissa)
      : std::runtime_error("integrand returned NaN at x = " + std::to_string(abscissa)),
        abscissa_(abscissa) {}

  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

/// Malformed textual distribution spec.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace extropy

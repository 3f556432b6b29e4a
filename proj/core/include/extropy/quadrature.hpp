#pragma once

#include <functional>
#include <span>

namespace extropy {

using Integrand = std::function<double(double)>;

/// Upper bound on the mass of |f| beyond a cut point: envelope(T) >= int_T^inf |f|.
using TailEnvelope = std::function<double(double)>;

enum class TailPolicy {
  substitution,  ///< x = lower + u / (1 - u), u in (0, 1)
  truncation,    ///< cut where the envelope drops below tail_cutoff_mass
};

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 200;
  double tail_cutoff_mass = 1e-13;
  TailPolicy tail_policy = TailPolicy::substitution;

  /// Throws ParameterError unless every field is strictly positive.
  void validate() const;
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions_used = 0;
  bool converged = false;
};

/// Globally adaptive 21-point Gauss-Kronrod integration of f over (lower, upper).
///
/// The rule is open, so f is never sampled at lower, upper, or any breakpoint;
/// integrable endpoint singularities are tolerated. `upper` may be +infinity.
/// Interior `breakpoints` (kinks of f) pre-split the initial panel set; points
/// outside (lower, upper) are ignored. For a semi-infinite domain with
/// TailPolicy::truncation, `envelope` must be supplied; without one the
/// substitution is used.
///
/// Non-convergence is reported through `converged`, never thrown. A NaN from f
/// throws EvaluationError carrying the abscissa.
IntegralResult integrate(const Integrand& f, double lower, double upper,
                         const QuadratureConfig& config = {},
                         std::span<const double> breakpoints = {},
                         const TailEnvelope& envelope = {});

struct PanelSelfCheck {
  int cases = 0;
  int max_degree = 0;
  double max_abs_error = 0.0;
};

/// Integrates the monomials x^k, k = 0..max exact degree, over [0,1] and
/// [-1,1] with a single panel and reports the largest error.
PanelSelfCheck integrate_panel_rule_selfcheck();

}  // namespace extropy

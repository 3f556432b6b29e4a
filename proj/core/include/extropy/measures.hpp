#pragma once

#include <string_view>

#include "extropy/distribution.hpp"
#include "extropy/quadrature.hpp"

namespace extropy {

/// A window (t1, t2) carrying strictly positive probability mass under a
/// given distribution. t2 may be +infinity.
struct TruncationWindow {
  double t1 = 0.0;
  double t2 = 0.0;
  double mass = 0.0;

  /// Throws WindowError unless 0 <= t1 < t2 and F(t2) - F(t1) > 0.
  static TruncationWindow make(const Distribution& dist, double t1, double t2);
};

enum class MeasureId {
  extropy,
  residual_extropy,
  past_extropy,
  interval_extropy,
  weighted_extropy,
  weighted_residual_extropy,
  weighted_past_extropy,
  weighted_interval_extropy,
  interval_entropy,
  weighted_interval_entropy,
};

enum class Method { closed_form, quadrature };

std::string_view name(MeasureId id);
std::string_view name(Method m);

struct MeasureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  Method method = Method::quadrature;
  MeasureId measure = MeasureId::extropy;
};

struct MeasureOptions {
  QuadratureConfig quadrature{};
  /// When false every measure is evaluated by quadrature, even where a closed
  /// form exists. Used to cross-check the two routes.
  bool closed_forms = true;
};

// Extropy family. Each value is -1/2 * int w(x) f(x)^2 dx / mass^2 over the
// window, with w(x) = 1 (plain) or x (weighted). All throw WindowError for a
// massless window and ConvergenceError when quadrature fails.

MeasureResult extropy(const Distribution& d, const MeasureOptions& opt = {});
MeasureResult residual_extropy(const Distribution& d, double t, const MeasureOptions& opt = {});
MeasureResult past_extropy(const Distribution& d, double t, const MeasureOptions& opt = {});
MeasureResult interval_extropy(const Distribution& d, const TruncationWindow& w, const MeasureOptions& opt = {});

MeasureResult weighted_extropy(const Distribution& d, const MeasureOptions& opt = {});
MeasureResult weighted_residual_extropy(const Distribution& d, double t, const MeasureOptions& opt = {});
MeasureResult weighted_past_extropy(const Distribution& d, double t, const MeasureOptions& opt = {});
MeasureResult weighted_interval_extropy(const Distribution& d, const TruncationWindow& w,
                                        const MeasureOptions& opt = {});

// Shannon-type comparison measures (natural log); f = 0 contributes 0.
MeasureResult interval_entropy(const Distribution& d, const TruncationWindow& w, const MeasureOptions& opt = {});
MeasureResult weighted_interval_entropy(const Distribution& d, const TruncationWindow& w,
                                        const MeasureOptions& opt = {});

/// Measure selected by id. Interval ids use (t1, t2); residual ids read t1,
/// past ids read t2 and global ids read neither.
MeasureResult evaluate(MeasureId id, const Distribution& d, double t1, double t2, const MeasureOptions& opt = {});

/// Generalized failure rate h_i = f(t_i) / (F(t2) - F(t1)), i in {1, 2}.
double gfr(const Distribution& d, const TruncationWindow& w, int which);

}  // namespace extropy

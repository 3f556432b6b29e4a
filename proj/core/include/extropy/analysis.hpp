#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "extropy/measures.hpp"

namespace extropy {

/// J(X) = F(t1)^2 J(past at t1) + mass^2 IJ(t1, t2) + S(t2)^2 J(residual at t2),
/// or its weighted analogue.
struct DecompositionReport {
  double past_term = 0.0;
  double interval_term = 0.0;
  double residual_term = 0.0;
  double total = 0.0;
  double direct_value = 0.0;
  double residual_gap = 0.0;
};

/// Requires 0 < F(t1) < F(t2) < 1 and finite t2; throws WindowError otherwise.
DecompositionReport decomposition(const Distribution& d, const TruncationWindow& w, const MeasureOptions& opt = {});
DecompositionReport weighted_decomposition(const Distribution& d, const TruncationWindow& w,
                                           const MeasureOptions& opt = {});

/// Upper bound IJ <= -h2/4 (weighted: IJ^w <= -t2 h2/4), which holds wherever
/// the measure is increasing in t2. Applicability is decided pointwise from a
/// central difference in t2 with step max(1e-5, 1e-5 t2).
struct BoundCheck {
  bool applicable = false;
  double value = 0.0;
  double bound = 0.0;
  double derivative = 0.0;
  /// Richardson truncation estimate plus propagated quadrature error.
  double derivative_error = 0.0;
  /// derivative > 10 * derivative_error.
  bool certified_increasing = false;
  /// Vacuously true when not applicable.
  bool satisfied = true;
};

inline constexpr double kBoundSlack = 1e-8;

BoundCheck bound_check(const Distribution& d, const TruncationWindow& w, const MeasureOptions& opt = {},
                       double slack = kBoundSlack);
BoundCheck weighted_bound_check(const Distribution& d, const TruncationWindow& w, const MeasureOptions& opt = {},
                                double slack = kBoundSlack);

/// |IJ_Y(t1, t2) - IJ_X((t1-b)/a, (t2-b)/a) / a| for Y = aX + b; (t1, t2) is
/// a window of Y. The left side is integrated on the transformed law.
double linear_transform_identity_gap(const Distribution& base, double a, double b, double t1, double t2,
                                     const MeasureOptions& opt = {});

/// |IJ^w_Y - (IJ^w_X + (b/a) IJ_X)| at the mapped window.
double weighted_linear_transform_identity_gap(const Distribution& base, double a, double b, double t1, double t2,
                                              const MeasureOptions& opt = {});

/// max over windows of |IJ + (h1 + h2)/4|; zero exactly for exponential laws.
double exponential_characterization_residual(const Distribution& d, std::span<const TruncationWindow> windows,
                                             const MeasureOptions& opt = {});

/// 25 windows: t1 in {0.2, 0.5, 1, 1.5, 2} x gaps {0.3, 0.6, 1, 2, 4}, with t1
/// offset by the support's lower bound.
std::vector<TruncationWindow> characterization_grid(const Distribution& d);

/// Smallest doubling step T > t with survival(T) < ratio * survival(t), or the
/// support's upper bound if that comes first.
double limit_horizon(const Distribution& d, double t, double ratio = 1e-7);

/// -1/2 int_{t1}^{t2} S^2 / (int_{t1}^{t2} S)^2 for the base survival S: the
/// interval extropy of the equilibrium law, written without building it.
MeasureResult equilibrium_interval_extropy_ratio(const Distribution& base, double t1, double t2,
                                                 const MeasureOptions& opt = {});

enum class ScanDirection { vary_t1, vary_t2 };
enum class Monotonicity { increasing, decreasing, non_monotone, flat };

std::string_view name(ScanDirection d);
std::string_view name(Monotonicity m);

struct ScanPoint {
  double t = 0.0;
  double value = 0.0;
  double error_estimate = 0.0;
};

struct ScanReport {
  std::vector<ScanPoint> grid;
  ScanDirection direction = ScanDirection::vary_t1;
  double fixed_point = 0.0;
  MeasureId measure = MeasureId::interval_extropy;
  Monotonicity verdict = Monotonicity::flat;
  /// 10x the largest error estimate on the grid.
  double noise_floor = 0.0;
  /// Interior maximum (preferred) or minimum when the verdict is non_monotone.
  std::optional<ScanPoint> extremum;
  bool extremum_is_maximum = false;
};

/// Evaluates an interval measure (IJ, IJ^w, H or IH^w) along `grid`, holding
/// the other endpoint at `fixed`. Differences within the noise floor count as
/// flat. Throws WindowError naming the first invalid grid point.
ScanReport scan(const Distribution& d, ScanDirection direction, double fixed, std::span<const double> grid,
                MeasureId measure, const MeasureOptions& opt = {});

/// Classifies a sequence; exposed for testing.
Monotonicity classify(std::span<const double> values, double noise_floor);

/// n evenly spaced points on [lo + inset, hi - inset].
std::vector<double> inset_grid(double lo, double hi, int n, double inset = 1e-3);

}  // namespace extropy

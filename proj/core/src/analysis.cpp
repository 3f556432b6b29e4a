#include "extropy/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "extropy/errors.hpp"
#include "number_text.hpp"

namespace extropy {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

DecompositionReport decompose(const Distribution& d, const TruncationWindow& w, const MeasureOptions& opt,
                              bool weighted) {
  if (!std::isfinite(w.t2)) throw WindowError("decomposition requires a finite t2");
  const double below = d.interval_mass(0.0, w.t1);
  const double above = d.interval_mass(w.t2, kInf);
  if (!(below > 0.0) || !(above > 0.0))
    throw WindowError("decomposition requires 0 < F(t1) < F(t2) < 1");

  DecompositionReport r;
  if (weighted) {
    r.past_term = below * below * weighted_past_extropy(d, w.t1, opt).value;
    r.interval_term = w.mass * w.mass * weighted_interval_extropy(d, w, opt).value;
    r.residual_term = above * above * weighted_residual_extropy(d, w.t2, opt).value;
    r.direct_value = weighted_extropy(d, opt).value;
  } else {
    r.past_term = below * below * past_extropy(d, w.t1, opt).value;
    r.interval_term = w.mass * w.mass * interval_extropy(d, w, opt).value;
    r.residual_term = above * above * residual_extropy(d, w.t2, opt).value;
    r.direct_value = extropy(d, opt).value;
  }
  r.total = r.past_term + r.interval_term + r.residual_term;
  r.residual_gap = std::abs(r.total - r.direct_value);
  return r;
}

BoundCheck check_bound(const Distribution& d, const TruncationWindow& w, const MeasureOptions& opt, double slack,
                       bool weighted) {
  BoundCheck out;
  if (!std::isfinite(w.t2)) return out;

  auto measure = [&](double t2) {
    const auto win = TruncationWindow::make(d, w.t1, t2);
    return weighted ? weighted_interval_extropy(d, win, opt) : interval_extropy(d, win, opt);
  };
  const double h = std::max(1e-5, 1e-5 * w.t2);
  if (!(w.t2 - 2.0 * h > w.t1)) throw WindowError("bound check: window too narrow for the t2 difference step");

  const MeasureResult centre = measure(w.t2);
  const MeasureResult up = measure(w.t2 + h);
  const MeasureResult down = measure(w.t2 - h);
  const MeasureResult up2 = measure(w.t2 + 2.0 * h);
  const MeasureResult down2 = measure(w.t2 - 2.0 * h);

  const double d1 = (up.value - down.value) / (2.0 * h);
  const double d2 = (up2.value - down2.value) / (4.0 * h);
  out.value = centre.value;
  out.derivative = d1;
  out.derivative_error = std::abs(d1 - d2) / 3.0 + (up.error_estimate + down.error_estimate) / (2.0 * h);
  out.certified_increasing = out.derivative > 10.0 * out.derivative_error;
  out.applicable = out.derivative >= 0.0;

  const double h2 = gfr(d, w, 2);
  out.bound = weighted ? -w.t2 * h2 / 4.0 : -h2 / 4.0;
  out.satisfied = !out.applicable || out.value <= out.bound + slack;
  return out;
}

struct MappedWindows {
  Distribution transformed;
  TruncationWindow y;
  TruncationWindow x;
};

MappedWindows map_windows(const Distribution& base, double a, double b, double t1, double t2) {
  Distribution y = linear_transform(base, a, b);
  const auto wy = TruncationWindow::make(y, t1, t2);
  const auto wx = TruncationWindow::make(base, std::max(0.0, (t1 - b) / a), (t2 - b) / a);
  return {std::move(y), wy, wx};
}

}  // namespace

DecompositionReport decomposition(const Distribution& d, const TruncationWindow& w, const MeasureOptions& opt) {
  return decompose(d, w, opt, false);
}

DecompositionReport weighted_decomposition(const Distribution& d, const TruncationWindow& w,
                                           const MeasureOptions& opt) {
  return decompose(d, w, opt, true);
}

BoundCheck bound_check(const Distribution& d, const TruncationWindow& w, const MeasureOptions& opt, double slack) {
  return check_bound(d, w, opt, slack, false);
}

BoundCheck weighted_bound_check(const Distribution& d, const TruncationWindow& w, const MeasureOptions& opt,
                                double slack) {
  return check_bound(d, w, opt, slack, true);
}

double linear_transform_identity_gap(const Distribution& base, double a, double b, double t1, double t2,
                                     const MeasureOptions& opt) {
  const auto m = map_windows(base, a, b, t1, t2);
  const double lhs = interval_extropy(m.transformed, m.y, opt).value;
  const double rhs = interval_extropy(base, m.x, opt).value / a;
  return std::abs(lhs - rhs);
}

double weighted_linear_transform_identity_gap(const Distribution& base, double a, double b, double t1, double t2,
                                              const MeasureOptions& opt) {
  const auto m = map_windows(base, a, b, t1, t2);
  const double lhs = weighted_interval_extropy(m.transformed, m.y, opt).value;
  const double rhs = weighted_interval_extropy(base, m.x, opt).value + b / a * interval_extropy(base, m.x, opt).value;
  return std::abs(lhs - rhs);
}

double exponential_characterization_residual(const Distribution& d, std::span<const TruncationWindow> windows,
                                             const MeasureOptions& opt) {
  double worst = 0.0;
  for (const auto& w : windows) {
    const double ij = interval_extropy(d, w, opt).value;
    worst = std::max(worst, std::abs(ij + (gfr(d, w, 1) + gfr(d, w, 2)) / 4.0));
  }
  return worst;
}

std::vector<TruncationWindow> characterization_grid(const Distribution& d) {
  static constexpr double kStarts[] = {0.2, 0.5, 1.0, 1.5, 2.0};
  static constexpr double kGaps[] = {0.3, 0.6, 1.0, 2.0, 4.0};
  const double offset = d.support().lower;
  std::vector<TruncationWindow> out;
  out.reserve(25);
  for (double s : kStarts)
    for (double g : kGaps) out.push_back(TruncationWindow::make(d, offset + s, offset + s + g));
  return out;
}

double limit_horizon(const Distribution& d, double t, double ratio) {
  const double upper = d.support().upper;
  const double target = ratio * d.survival(t);
  double step = 1.0;
  double T = t + step;
  while (T < upper && d.survival(T) >= target) {
    step *= 2.0;
    T = t + step;
    if (!std::isfinite(T)) throw WindowError("limit_horizon: survival never falls below the cutoff");
  }
  return std::min(T, upper);
}

MeasureResult equilibrium_interval_extropy_ratio(const Distribution& base, double t1, double t2,
                                                 const MeasureOptions& opt) {
  if (!(t1 >= 0.0 && t1 < t2)) throw WindowError("equilibrium ratio requires 0 <= t1 < t2");
  const double hi = std::min(t2, base.support().upper);
  std::vector<double> breaks(base.knots().begin(), base.knots().end());
  breaks.push_back(base.support().lower);

  const auto den = integrate([&base](double x) { return base.survival(x); }, t1, hi, opt.quadrature, breaks);
  if (!(den.value > 0.0)) throw WindowError("equilibrium ratio: window has no mass");
  // Normalizing by the window mass keeps the integrand O(1).
  const double m = den.value;
  const auto num = integrate(
      [&base, m](double x) {
        const double s = base.survival(x) / m;
        return s * s;
      },
      t1, hi, opt.quadrature, breaks);
  if (!den.converged || !num.converged)
    throw ConvergenceError("equilibrium ratio: quadrature did not converge", den.error_estimate + num.error_estimate);
  const double value = -0.5 * num.value;
  const double err = 0.5 * num.error_estimate + std::abs(value) * 2.0 * den.error_estimate / m;
  return {value, err, Method::quadrature, MeasureId::interval_extropy};
}

std::string_view name(ScanDirection d) { return d == ScanDirection::vary_t1 ? "vary_t1" : "vary_t2"; }

std::string_view name(Monotonicity m) {
  switch (m) {
    case Monotonicity::increasing: return "increasing";
    case Monotonicity::decreasing: return "decreasing";
    case Monotonicity::non_monotone: return "non_monotone";
    case Monotonicity::flat: return "flat";
  }
  return "unknown";
}

Monotonicity classify(std::span<const double> values, double noise_floor) {
  bool up = false;
  bool down = false;
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double diff = values[i] - values[i - 1];
    if (diff > noise_floor) up = true;
    if (diff < -noise_floor) down = true;
  }
  if (up && down) return Monotonicity::non_monotone;
  if (up) return Monotonicity::increasing;
  if (down) return Monotonicity::decreasing;
  return Monotonicity::flat;
}

ScanReport scan(const Distribution& d, ScanDirection direction, double fixed, std::span<const double> grid,
                MeasureId measure, const MeasureOptions& opt) {
  switch (measure) {
    case MeasureId::interval_extropy:
    case MeasureId::weighted_interval_extropy:
    case MeasureId::interval_entropy:
    case MeasureId::weighted_interval_entropy: break;
    default: throw std::invalid_argument("scan: only interval measures can be scanned");
  }

  ScanReport r;
  r.direction = direction;
  r.fixed_point = fixed;
  r.measure = measure;
  r.grid.reserve(grid.size());
  for (double t : grid) {
    const double t1 = direction == ScanDirection::vary_t1 ? t : fixed;
    const double t2 = direction == ScanDirection::vary_t1 ? fixed : t;
    MeasureResult m;
    try {
      m = evaluate(measure, d, t1, t2, opt);
    } catch (const WindowError& e) {
      throw WindowError("scan: invalid window at grid point t = " + detail::number(t) + ": " + e.what());
    }
    r.grid.push_back({t, m.value, m.error_estimate});
  }

  std::vector<double> values;
  values.reserve(r.grid.size());
  double max_err = 0.0;
  for (const auto& p : r.grid) {
    values.push_back(p.value);
    max_err = std::max(max_err, p.error_estimate);
  }
  r.noise_floor = 10.0 * max_err;
  r.verdict = classify(values, r.noise_floor);

  if (r.verdict == Monotonicity::non_monotone) {
    const auto hi = std::max_element(values.begin(), values.end());
    const auto lo = std::min_element(values.begin(), values.end());
    auto interior = [&](auto it) { return it != values.begin() && it != values.end() - 1; };
    if (interior(hi)) {
      r.extremum = r.grid[static_cast<std::size_t>(hi - values.begin())];
      r.extremum_is_maximum = true;
    } else if (interior(lo)) {
      r.extremum = r.grid[static_cast<std::size_t>(lo - values.begin())];
    }
  }
  return r;
}

std::vector<double> inset_grid(double lo, double hi, int n, double inset) {
  if (n < 2) throw std::invalid_argument("inset_grid: need at least two points");
  const double a = lo + inset;
  const double b = hi - inset;
  if (!(a < b)) throw std::invalid_argument("inset_grid: empty range after inset");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
  return out;
}

}  // namespace extropy

#include "extropy/measures.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "extropy/errors.hpp"
#include "number_text.hpp"
#include "extropy/oracles.hpp"

namespace extropy {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();

enum class Kernel { extropy, weighted_extropy, entropy, weighted_entropy };

bool is_weibull22(const Distribution& d) {
  const auto* w = std::get_if<family::Weibull2>(&d.family());
  return w && w->alpha == 2.0 && w->lambda == 2.0;
}

std::optional<double> closed_form(const Distribution& d, Kernel kernel, double t1, double t2) {
  if (const auto* e = std::get_if<family::Exponential>(&d.family())) {
    if (kernel == Kernel::extropy) return oracles::exponential_interval(e->rate, t1, t2);
    if (kernel == Kernel::weighted_extropy) return oracles::exponential_weighted_interval(e->rate, t1, t2);
  }
  if (const auto* p = std::get_if<family::ParetoShifted>(&d.family()); p && kernel == Kernel::extropy)
    return oracles::pareto_interval(p->a, p->b, std::max(t1, p->a), t2);
  if (is_weibull22(d)) {
    if (kernel == Kernel::extropy && t2 == kInf) return oracles::weibull22_residual(t1);
    if (kernel == Kernel::weighted_extropy) return oracles::weibull22_weighted_interval(t1, t2);
  }
  return std::nullopt;
}

MeasureResult window_measure(const Distribution& d, MeasureId id, Kernel kernel, const TruncationWindow& w,
                             const MeasureOptions& opt) {
  if (opt.closed_forms) {
    if (auto v = closed_form(d, kernel, w.t1, w.t2)) return {*v, 4.0 * kEps * std::abs(*v), Method::closed_form, id};
  }

  const double lo = std::max(w.t1, d.support().lower);
  const double hi = std::min(w.t2, d.support().upper);
  const double mass = w.mass;
  // Integrating the conditional density keeps the integrand O(1) for far-tail windows.
  Integrand f;
  switch (kernel) {
    case Kernel::extropy:
      f = [&d, mass](double x) {
        const double g = d.pdf(x) / mass;
        return g * g;
      };
      break;
    case Kernel::weighted_extropy:
      f = [&d, mass](double x) {
        const double g = d.pdf(x) / mass;
        return x * g * g;
      };
      break;
    case Kernel::entropy:
      f = [&d, mass](double x) {
        const double g = d.pdf(x) / mass;
        return g > 0.0 ? g * std::log(g) : 0.0;
      };
      break;
    case Kernel::weighted_entropy:
      f = [&d, mass](double x) {
        const double g = d.pdf(x) / mass;
        return g > 0.0 ? x * g * std::log(g) : 0.0;
      };
      break;
  }

  const IntegralResult r = integrate(f, lo, hi, opt.quadrature, d.knots());
  if (!r.converged)
    throw ConvergenceError(std::string(name(id)) + ": quadrature did not converge on " + d.describe(),
                           r.error_estimate);
  const bool is_extropy = kernel == Kernel::extropy || kernel == Kernel::weighted_extropy;
  const double scale = is_extropy ? -0.5 : -1.0;
  return {scale * r.value, std::abs(scale) * r.error_estimate, Method::quadrature, id};
}

TruncationWindow full_window(const Distribution& d) { return {d.support().lower, kInf, 1.0}; }

}  // namespace

TruncationWindow TruncationWindow::make(const Distribution& dist, double t1, double t2) {
  if (!(t1 >= 0.0)) throw WindowError("window requires t1 >= 0, got " + detail::number(t1));
  if (!(t1 < t2))
    throw WindowError("window requires t1 < t2, got (" + detail::number(t1) + ", " + detail::number(t2) + ")");
  const double mass = dist.interval_mass(t1, t2);
  if (!(mass > 0.0))
    throw WindowError("window (" + detail::number(t1) + ", " + detail::number(t2) + ") has no probability mass");
  return {t1, t2, mass};
}

std::string_view name(MeasureId id) {
  switch (id) {
    case MeasureId::extropy: return "extropy";
    case MeasureId::residual_extropy: return "residual_extropy";
    case MeasureId::past_extropy: return "past_extropy";
    case MeasureId::interval_extropy: return "interval_extropy";
    case MeasureId::weighted_extropy: return "weighted_extropy";
    case MeasureId::weighted_residual_extropy: return "weighted_residual_extropy";
    case MeasureId::weighted_past_extropy: return "weighted_past_extropy";
    case MeasureId::weighted_interval_extropy: return "weighted_interval_extropy";
    case MeasureId::interval_entropy: return "interval_entropy";
    case MeasureId::weighted_interval_entropy: return "weighted_interval_entropy";
  }
  return "unknown";
}

std::string_view name(Method m) { return m == Method::closed_form ? "closed_form" : "quadrature"; }

MeasureResult extropy(const Distribution& d, const MeasureOptions& opt) {
  return window_measure(d, MeasureId::extropy, Kernel::extropy, full_window(d), opt);
}

MeasureResult residual_extropy(const Distribution& d, double t, const MeasureOptions& opt) {
  return window_measure(d, MeasureId::residual_extropy, Kernel::extropy, TruncationWindow::make(d, t, kInf), opt);
}

MeasureResult past_extropy(const Distribution& d, double t, const MeasureOptions& opt) {
  return window_measure(d, MeasureId::past_extropy, Kernel::extropy, TruncationWindow::make(d, 0.0, t), opt);
}

MeasureResult interval_extropy(const Distribution& d, const TruncationWindow& w, const MeasureOptions& opt) {
  return window_measure(d, MeasureId::interval_extropy, Kernel::extropy, w, opt);
}

MeasureResult weighted_extropy(const Distribution& d, const MeasureOptions& opt) {
  return window_measure(d, MeasureId::weighted_extropy, Kernel::weighted_extropy, full_window(d), opt);
}

MeasureResult weighted_residual_extropy(const Distribution& d, double t, const MeasureOptions& opt) {
  return window_measure(d, MeasureId::weighted_residual_extropy, Kernel::weighted_extropy,
                        TruncationWindow::make(d, t, kInf), opt);
}

MeasureResult weighted_past_extropy(const Distribution& d, double t, const MeasureOptions& opt) {
  return window_measure(d, MeasureId::weighted_past_extropy, Kernel::weighted_extropy,
                        TruncationWindow::make(d, 0.0, t), opt);
}

MeasureResult weighted_interval_extropy(const Distribution& d, const TruncationWindow& w,
                                        const MeasureOptions& opt) {
  return window_measure(d, MeasureId::weighted_interval_extropy, Kernel::weighted_extropy, w, opt);
}

MeasureResult interval_entropy(const Distribution& d, const TruncationWindow& w, const MeasureOptions& opt) {
  return window_measure(d, MeasureId::interval_entropy, Kernel::entropy, w, opt);
}

MeasureResult weighted_interval_entropy(const Distribution& d, const TruncationWindow& w,
                                        const MeasureOptions& opt) {
  return window_measure(d, MeasureId::weighted_interval_entropy, Kernel::weighted_entropy, w, opt);
}

MeasureResult evaluate(MeasureId id, const Distribution& d, double t1, double t2, const MeasureOptions& opt) {
  switch (id) {
    case MeasureId::extropy: return extropy(d, opt);
    case MeasureId::residual_extropy: return residual_extropy(d, t1, opt);
    case MeasureId::past_extropy: return past_extropy(d, t2, opt);
    case MeasureId::interval_extropy: return interval_extropy(d, TruncationWindow::make(d, t1, t2), opt);
    case MeasureId::weighted_extropy: return weighted_extropy(d, opt);
    case MeasureId::weighted_residual_extropy: return weighted_residual_extropy(d, t1, opt);
    case MeasureId::weighted_past_extropy: return weighted_past_extropy(d, t2, opt);
    case MeasureId::weighted_interval_extropy:
      return weighted_interval_extropy(d, TruncationWindow::make(d, t1, t2), opt);
    case MeasureId::interval_entropy: return interval_entropy(d, TruncationWindow::make(d, t1, t2), opt);
    case MeasureId::weighted_interval_entropy:
      return weighted_interval_entropy(d, TruncationWindow::make(d, t1, t2), opt);
  }
  throw std::invalid_argument("unknown measure");
}

double gfr(const Distribution& d, const TruncationWindow& w, int which) {
  if (which != 1 && which != 2) throw std::invalid_argument("gfr: which must be 1 or 2");
  const double t = which == 1 ? w.t1 : w.t2;
  return std::isfinite(t) ? d.pdf(t) / w.mass : 0.0;
}

}  // namespace extropy

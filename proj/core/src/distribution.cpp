#include "extropy/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "extropy/errors.hpp"
#include "number_text.hpp"
#include "extropy/oracles.hpp"
#include "extropy/quadrature.hpp"

namespace extropy {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ParameterError(std::string(what) + " must be positive and finite");
}

using detail::number;

// Survival of the base integrated over (lo, hi), hi possibly infinite.
double integrate_survival(const Distribution& base, double lo, double hi) {
  if (!(lo < hi)) return 0.0;
  std::vector<double> breaks(base.knots().begin(), base.knots().end());
  breaks.push_back(base.support().lower);
  const auto r = integrate([&base](double x) { return base.survival(x); }, lo, hi, {}, breaks);
  if (!r.converged) throw ConvergenceError("survival integral did not converge", r.error_estimate);
  return r.value;
}

double piecewise_cdf(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 2.0) return 1.0;
  if (x <= 1.0) return std::exp(-0.5 - 1.0 / x);
  return std::exp(-2.0 + 0.5 * x * x);
}

double piecewise_pdf(double x) {
  if (x <= 0.0 || x >= 2.0) return 0.0;
  // Left branch owns the knot.
  if (x <= 1.0) return std::exp(-0.5 - 1.0 / x - 2.0 * std::log(x));
  return std::exp(-2.0 + 0.5 * x * x) * x;
}

}  // namespace

Distribution::Distribution(Family family, Support support, std::vector<double> knots)
    : family_(std::move(family)), support_(support), knots_(std::move(knots)) {
  mean_ = std::visit(
      overloaded{
          [](const family::Exponential& e) -> std::optional<double> { return 1.0 / e.rate; },
          [](const family::Weibull2& w) -> std::optional<double> {
            return std::pow(w.lambda, -1.0 / w.alpha) * std::tgamma(1.0 + 1.0 / w.alpha);
          },
          [](const family::Lognormal& l) -> std::optional<double> { return std::exp(l.mu + 0.5 * l.sigma2); },
          [](const family::ParetoShifted& p) -> std::optional<double> {
            if (p.b <= 1.0) return std::nullopt;
            return p.a * p.b / (p.b - 1.0);
          },
          [this](const family::PiecewiseExample&) -> std::optional<double> {
            return integrate_survival(*this, 0.0, 2.0);
          },
          [](const family::LinearTransform& t) -> std::optional<double> {
            if (!t.base->has_finite_mean()) return std::nullopt;
            return t.scale * t.base->mean() + t.shift;
          },
          [](const family::Equilibrium& q) -> std::optional<double> {
            // E(Y) = E(X^2) / (2 E(X)).
            if (const auto* p = std::get_if<family::ParetoShifted>(&q.base->family()); p && p->b <= 2.0)
              return std::nullopt;
            const Distribution& base = *q.base;
            std::vector<double> breaks(base.knots().begin(), base.knots().end());
            breaks.push_back(base.support().lower);
            const auto r = integrate([&base](double t) { return t * base.survival(t); }, 0.0,
                                     base.support().upper, {}, breaks);
            if (!r.converged || !std::isfinite(r.value)) return std::nullopt;
            return r.value / q.base_mean;
          },
      },
      family_);
}

Distribution Distribution::exponential(double rate) {
  require_positive(rate, "exponential rate");
  return Distribution(family::Exponential{rate}, {0.0, kInf}, {});
}

Distribution Distribution::weibull2(double alpha, double lambda) {
  require_positive(alpha, "weibull2 alpha");
  require_positive(lambda, "weibull2 lambda");
  return Distribution(family::Weibull2{alpha, lambda}, {0.0, kInf}, {});
}

Distribution Distribution::lognormal(double mu, double sigma2) {
  if (!std::isfinite(mu)) throw ParameterError("lognormal mu must be finite");
  require_positive(sigma2, "lognormal sigma2");
  return Distribution(family::Lognormal{mu, sigma2}, {0.0, kInf}, {});
}

Distribution Distribution::pareto_shifted(double a, double b) {
  require_positive(a, "pareto_shifted a");
  require_positive(b, "pareto_shifted b");
  return Distribution(family::ParetoShifted{a, b}, {a, kInf}, {});
}

Distribution Distribution::piecewise_example() {
  return Distribution(family::PiecewiseExample{}, {0.0, 2.0}, {1.0});
}

Distribution linear_transform(const Distribution& base, double a, double b) {
  require_positive(a, "linear transform scale a");
  if (!(b >= 0.0) || !std::isfinite(b)) throw ParameterError("linear transform shift b must be >= 0");
  const Support s = base.support();
  std::vector<double> knots;
  for (double k : base.knots()) knots.push_back(a * k + b);
  return Distribution(family::LinearTransform{std::make_shared<const Distribution>(base), a, b},
                      {a * s.lower + b, a * s.upper + b}, std::move(knots));
}

Distribution equilibrium(const Distribution& base) {
  if (!base.has_finite_mean()) throw InfiniteMeanError("equilibrium law requires a finite mean: " + base.describe());
  std::vector<double> knots(base.knots().begin(), base.knots().end());
  if (base.support().lower > 0.0) knots.push_back(base.support().lower);
  std::sort(knots.begin(), knots.end());
  return Distribution(family::Equilibrium{std::make_shared<const Distribution>(base), base.mean()},
                      {0.0, base.support().upper}, std::move(knots));
}

double Distribution::pdf(double x) const {
  return std::visit(
      overloaded{
          [x](const family::Exponential& e) { return x < 0.0 ? 0.0 : e.rate * std::exp(-e.rate * x); },
          [x](const family::Weibull2& w) {
            if (x < 0.0) return 0.0;
            if (x == 0.0) return w.alpha < 1.0 ? kInf : (w.alpha == 1.0 ? w.lambda : 0.0);
            const double xa = std::pow(x, w.alpha);
            return w.alpha * w.lambda * xa / x * std::exp(-w.lambda * xa);
          },
          [x](const family::Lognormal& l) {
            if (x <= 0.0) return 0.0;
            const double sigma = std::sqrt(l.sigma2);
            const double lx = std::log(x);
            const double z = (lx - l.mu) / sigma;
            return std::exp(-0.5 * z * z - lx) / (sigma * std::sqrt(2.0 * std::numbers::pi));
          },
          [x](const family::ParetoShifted& p) {
            if (x < p.a) return 0.0;
            return p.b / x * std::pow(p.a / x, p.b);
          },
          [x](const family::PiecewiseExample&) { return piecewise_pdf(x); },
          [x](const family::LinearTransform& t) { return t.base->pdf((x - t.shift) / t.scale) / t.scale; },
          [x](const family::Equilibrium& q) { return x < 0.0 ? 0.0 : q.base->survival(x) / q.base_mean; },
      },
      family_);
}

double Distribution::cdf(double x) const {
  return std::visit(
      overloaded{
          [x](const family::Exponential& e) { return x <= 0.0 ? 0.0 : -std::expm1(-e.rate * x); },
          [x](const family::Weibull2& w) {
            return x <= 0.0 ? 0.0 : -std::expm1(-w.lambda * std::pow(x, w.alpha));
          },
          [x](const family::Lognormal& l) {
            if (x <= 0.0) return 0.0;
            return std_normal_survival(-(std::log(x) - l.mu) / std::sqrt(l.sigma2));
          },
          [x](const family::ParetoShifted& p) {
            return x <= p.a ? 0.0 : -std::expm1(p.b * std::log(p.a / x));
          },
          [x](const family::PiecewiseExample&) { return piecewise_cdf(x); },
          [x](const family::LinearTransform& t) { return t.base->cdf((x - t.shift) / t.scale); },
          [this, x](const family::Equilibrium& q) {
            if (x <= 0.0) return 0.0;
            if (x >= support_.upper) return 1.0;
            const double tail = integrate_survival(*q.base, x, support_.upper) / q.base_mean;
            if (tail < 0.5) return 1.0 - tail;
            return integrate_survival(*q.base, 0.0, x) / q.base_mean;
          },
      },
      family_);
}

double Distribution::survival(double x) const {
  return std::visit(
      overloaded{
          [x](const family::Exponential& e) { return x <= 0.0 ? 1.0 : std::exp(-e.rate * x); },
          [x](const family::Weibull2& w) { return x <= 0.0 ? 1.0 : std::exp(-w.lambda * std::pow(x, w.alpha)); },
          [x](const family::Lognormal& l) {
            if (x <= 0.0) return 1.0;
            return std_normal_survival((std::log(x) - l.mu) / std::sqrt(l.sigma2));
          },
          [x](const family::ParetoShifted& p) { return x <= p.a ? 1.0 : std::pow(p.a / x, p.b); },
          [x](const family::PiecewiseExample&) { return 1.0 - piecewise_cdf(x); },
          [x](const family::LinearTransform& t) { return t.base->survival((x - t.shift) / t.scale); },
          [this, x](const family::Equilibrium& q) {
            if (x <= 0.0) return 1.0;
            if (x >= support_.upper) return 0.0;
            const double tail = integrate_survival(*q.base, x, support_.upper) / q.base_mean;
            if (tail < 0.5) return tail;
            return 1.0 - integrate_survival(*q.base, 0.0, x) / q.base_mean;
          },
      },
      family_);
}

double Distribution::interval_mass(double t1, double t2) const {
  const double lo = std::max(t1, support_.lower);
  const double hi = std::min(t2, support_.upper);
  if (!(lo < hi)) return 0.0;
  if (const auto* q = std::get_if<family::Equilibrium>(&family_))
    return integrate_survival(*q->base, lo, hi) / q->base_mean;
  const double below = cdf(lo);
  if (below <= 0.5) return (std::isfinite(hi) ? cdf(hi) : 1.0) - below;
  return survival(lo) - (std::isfinite(hi) ? survival(hi) : 0.0);
}

double Distribution::mean() const {
  if (!mean_) throw InfiniteMeanError("distribution has no finite mean: " + describe());
  return *mean_;
}

std::string Distribution::describe() const {
  return std::visit(
      overloaded{
          [](const family::Exponential& e) { return "exp(rate=" + number(e.rate) + ")"; },
          [](const family::Weibull2& w) {
            return "weibull2(alpha=" + number(w.alpha) + ",lambda=" + number(w.lambda) + ")";
          },
          [](const family::Lognormal& l) {
            return "lognormal(mu=" + number(l.mu) + ",sigma2=" + number(l.sigma2) + ")";
          },
          [](const family::ParetoShifted& p) {
            return "pareto_shifted(a=" + number(p.a) + ",b=" + number(p.b) + ")";
          },
          [](const family::PiecewiseExample&) { return std::string("piecewise_example()"); },
          [](const family::LinearTransform& t) {
            return "lt(" + t.base->describe() + ",a=" + number(t.scale) + ",b=" + number(t.shift) + ")";
          },
          [](const family::Equilibrium& q) { return "eq(" + q.base->describe() + ")"; },
      },
      family_);
}

}  // namespace extropy

#include "extropy/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "extropy/errors.hpp"

namespace extropy {
namespace {

// Gauss-Kronrod 10/21 nodes and weights (QUADPACK dqk21). Odd-indexed xgk are
// the Gauss nodes; xgk[10] is the centre.
constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};

constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

double checked(const Integrand& f, double x) {
  const double y = f(x);
  if (std::isnan(y)) throw EvaluationError(x);
  return y;
}

Panel gauss_kronrod(const Integrand& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<double, 10> lo{};
  std::array<double, 10> hi{};
  const double fc = checked(f, centre);
  double kronrod = kKronrodWeights[10] * fc;
  double gauss = 0.0;
  double abs_sum = std::abs(kronrod);
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kKronrodNodes[j];
    lo[j] = checked(f, centre - dx);
    hi[j] = checked(f, centre + dx);
    const double sum = lo[j] + hi[j];
    kronrod += kKronrodWeights[j] * sum;
    abs_sum += kKronrodWeights[j] * (std::abs(lo[j]) + std::abs(hi[j]));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * sum;
  }

  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[10] * std::abs(fc - mean);
  for (std::size_t j = 0; j < 10; ++j)
    asc += kKronrodWeights[j] * (std::abs(lo[j] - mean) + std::abs(hi[j] - mean));

  const double scale = std::abs(half);
  const double value = kronrod * half;
  abs_sum *= scale;
  asc *= scale;

  // QUADPACK error heuristic.
  double error = std::abs((kronrod - gauss) * half);
  if (asc != 0.0 && error != 0.0) error = asc * std::min(1.0, std::pow(200.0 * error / asc, 1.5));
  if (abs_sum > kTiny / (50.0 * kEps)) error = std::max(50.0 * kEps * abs_sum, error);
  return {a, b, value, error};
}

IntegralResult adapt(const Integrand& f, std::vector<double> edges, const QuadratureConfig& cfg) {
  std::vector<Panel> panels;
  panels.reserve(static_cast<std::size_t>(cfg.max_subdivisions) + edges.size());
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    panels.push_back(gauss_kronrod(f, edges[i], edges[i + 1]));

  auto totals = [&] {
    double v = 0.0;
    double e = 0.0;
    for (const auto& p : panels) {
      v += p.value;
      e += p.error;
    }
    return std::pair{v, e};
  };

  auto [value, error] = totals();
  auto tolerance = [&](double v) { return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(v)); };

  while (error > tolerance(value) && static_cast<int>(panels.size()) < cfg.max_subdivisions) {
    auto worst = std::max_element(panels.begin(), panels.end(),
                                  [](const Panel& x, const Panel& y) { return x.error < y.error; });
    const Panel p = *worst;
    const double mid = 0.5 * (p.a + p.b);
    // Panel too narrow to split further in floating point.
    if (!(mid > p.a && mid < p.b)) break;
    *worst = gauss_kronrod(f, p.a, mid);
    panels.push_back(gauss_kronrod(f, mid, p.b));
    std::tie(value, error) = totals();
  }

  // Reduce in abscissa order so the sum is independent of refinement history.
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  std::tie(value, error) = totals();

  IntegralResult out;
  out.value = value;
  out.error_estimate = error;
  out.subdivisions_used = static_cast<int>(panels.size());
  out.converged = error <= tolerance(value);
  return out;
}

std::vector<double> panel_edges(double lower, double upper, std::span<const double> breakpoints) {
  std::vector<double> edges{lower};
  for (double x : breakpoints)
    if (x > lower && x < upper) edges.push_back(x);
  edges.push_back(upper);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdivisions < 1 || !(tail_cutoff_mass > 0.0))
    throw ParameterError("quadrature tolerances and limits must be strictly positive");
}

IntegralResult integrate(const Integrand& f, double lower, double upper,
                         const QuadratureConfig& config, std::span<const double> breakpoints,
                         const TailEnvelope& envelope) {
  config.validate();
  if (!std::isfinite(lower)) throw std::invalid_argument("integrate: lower limit must be finite");
  if (!(lower < upper)) throw std::invalid_argument("integrate: requires lower < upper");

  if (std::isfinite(upper)) return adapt(f, panel_edges(lower, upper, breakpoints), config);

  if (config.tail_policy == TailPolicy::truncation && envelope) {
    double width = 1.0;
    while (envelope(lower + width) >= config.tail_cutoff_mass) {
      width *= 2.0;
      if (!std::isfinite(lower + width))
        throw std::domain_error("integrate: tail envelope never drops below the cutoff");
    }
    IntegralResult r = adapt(f, panel_edges(lower, lower + width, breakpoints), config);
    r.error_estimate += envelope(lower + width);
    r.converged = r.converged && r.error_estimate <= std::max(config.abs_tol, config.rel_tol * std::abs(r.value));
    return r;
  }

  // x = lower + u / (1 - u); dx = du / (1 - u)^2.
  auto mapped = [&f, lower](double u) {
    const double w = 1.0 - u;
    const double x = lower + u / w;
    const double y = f(x);
    if (std::isnan(y)) throw EvaluationError(x);
    return y == 0.0 ? 0.0 : y / (w * w);
  };
  std::vector<double> mapped_breaks;
  for (double x : breakpoints)
    if (x > lower && std::isfinite(x)) mapped_breaks.push_back((x - lower) / (1.0 + (x - lower)));
  return adapt(mapped, panel_edges(0.0, 1.0, mapped_breaks), config);
}

PanelSelfCheck integrate_panel_rule_selfcheck() {
  PanelSelfCheck out;
  out.max_degree = 31;
  QuadratureConfig single;
  single.max_subdivisions = 1;
  for (int k = 0; k <= out.max_degree; ++k) {
    auto mono = [k](double x) { return std::pow(x, k); };
    const double unit = integrate(mono, 0.0, 1.0, single).value;
    const double sym = integrate(mono, -1.0, 1.0, single).value;
    const double unit_exact = 1.0 / (k + 1);
    const double sym_exact = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
    out.max_abs_error = std::max({out.max_abs_error, std::abs(unit - unit_exact), std::abs(sym - sym_exact)});
    out.cases += 2;
  }
  return out;
}

}  // namespace extropy

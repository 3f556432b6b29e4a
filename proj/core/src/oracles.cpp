#include "extropy/oracles.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "extropy/errors.hpp"

namespace extropy {

double std_normal_survival(double z) { return 0.5 * std::erfc(z / std::numbers::sqrt2); }

double std_normal_scaled_survival(double z) {
  if (z < 5.0) return std_normal_survival(z) * std::exp(0.5 * z * z);
  // Laplace continued fraction for the Mills ratio, evaluated backwards.
  double tail = z;
  for (int k = 300; k >= 1; --k) tail = z + k / tail;
  return 1.0 / (tail * std::sqrt(2.0 * std::numbers::pi));
}

namespace oracles {
namespace {

void require_window(double t1, double t2) {
  if (!(t1 >= 0.0)) throw WindowError("closed form requires t1 >= 0");
  if (!(t1 < t2)) throw WindowError("closed form requires t1 < t2");
}

void require_rate(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) throw ParameterError("exponential rate must be positive");
}

// 1 - exp(-x), accurate for small x and exactly 1 at +inf.
double one_minus_exp_neg(double x) { return -std::expm1(-x); }

}  // namespace

std::string_view name(OracleId id) {
  switch (id) {
    case OracleId::exp_IJ: return "exp_IJ";
    case OracleId::exp_IJw: return "exp_IJw";
    case OracleId::pareto_IJ: return "pareto_IJ";
    case OracleId::weibull22_REx: return "weibull22_REx";
    case OracleId::weibull22_IJw: return "weibull22_IJw";
    case OracleId::weibull22_wREx: return "weibull22_wREx";
  }
  return "unknown";
}

double exponential_interval(double rate, double t1, double t2) {
  require_rate(rate);
  require_window(t1, t2);
  // Multiplied through by exp(rate * t1).
  const double d = rate * (t2 - t1);
  const double q = std::exp(-d);
  return -0.25 * rate * (1.0 + q) / one_minus_exp_neg(d);
}

double exponential_weighted_interval(double rate, double t1, double t2) {
  require_rate(rate);
  require_window(t1, t2);
  const double d = rate * (t2 - t1);
  const double q = std::exp(-d);
  const double gap = one_minus_exp_neg(d);
  const double far = std::isfinite(t2) ? t2 * q * q : 0.0;
  return -0.25 * rate * (t1 - far) / (gap * gap) - 0.125 * (1.0 + q) / gap;
}

double pareto_interval(double a, double b, double t1, double t2) {
  if (!(a > 0.0) || !(b > 0.0)) throw ParameterError("pareto parameters must be positive");
  require_window(t1, t2);
  if (t1 < a) throw WindowError("pareto closed form requires t1 >= a");
  // Divided through by t2^(2b+1); r = t1 / t2 in [0, 1).
  const double log_r = std::log(t1 / t2);
  const double num = -std::expm1((2.0 * b + 1.0) * log_r);
  const double den = -std::expm1(b * log_r);
  return -b * b * num / (2.0 * (2.0 * b + 1.0) * t1 * den * den);
}

double weibull22_residual(double t) {
  if (!(t >= 0.0)) throw WindowError("residual closed form requires t >= 0");
  return -t - 0.5 * std::sqrt(std::numbers::pi) * std_normal_scaled_survival(2.0 * std::numbers::sqrt2 * t);
}

double weibull22_weighted_interval(double t1, double t2) {
  require_window(t1, t2);
  // Multiplied through by exp(2 t1^2).
  const double d = 2.0 * (t2 - t1) * (t2 + t1);
  const double q = std::exp(-d);
  const double gap = one_minus_exp_neg(d);
  const double far = std::isfinite(t2) ? t2 * t2 * q * q : 0.0;
  return (far - t1 * t1) / (gap * gap) - 0.25 * (1.0 + q) / gap;
}

double weibull22_weighted_residual(double t) {
  if (!(t >= 0.0)) throw WindowError("residual closed form requires t >= 0");
  return -t * t - 0.25;
}

double evaluate(OracleId id, const OracleParams& params, double t1, double t2) {
  switch (id) {
    case OracleId::exp_IJ: return exponential_interval(params.rate, t1, t2);
    case OracleId::exp_IJw: return exponential_weighted_interval(params.rate, t1, t2);
    case OracleId::pareto_IJ: return pareto_interval(params.a, params.b, t1, t2);
    case OracleId::weibull22_REx: return weibull22_residual(t1);
    case OracleId::weibull22_IJw: return weibull22_weighted_interval(t1, t2);
    case OracleId::weibull22_wREx: return weibull22_weighted_residual(t1);
  }
  throw ParameterError("unknown oracle");
}

}  // namespace oracles
}  // namespace extropy

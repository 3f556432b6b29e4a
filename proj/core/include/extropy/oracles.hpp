#pragma once

#include <string_view>

namespace extropy {

/// P(Z > z) for Z ~ N(0, 1). Relative accuracy ~1e-14 on [-8, 8]; underflows
/// gracefully to 0 for very large z.
double std_normal_survival(double z);

/// P(Z > z) * exp(z^2 / 2): finite and O(1/z) even where both factors underflow.
double std_normal_scaled_survival(double z);

namespace oracles {

/// Closed-form measures available for specific families.
enum class OracleId {
  exp_IJ,          ///< interval extropy of Exp(rate)
  exp_IJw,         ///< weighted interval extropy of Exp(rate)
  pareto_IJ,       ///< interval extropy of the shifted Pareto (a, b)
  weibull22_REx,   ///< residual extropy of Weibull2(2, 2)
  weibull22_IJw,   ///< weighted interval extropy of Weibull2(2, 2)
  weibull22_wREx,  ///< weighted residual extropy of Weibull2(2, 2)
};

inline constexpr OracleId kAllOracles[] = {OracleId::exp_IJ,        OracleId::exp_IJw,
                                           OracleId::pareto_IJ,     OracleId::weibull22_REx,
                                           OracleId::weibull22_IJw, OracleId::weibull22_wREx};

std::string_view name(OracleId id);

/// Family parameters consumed by an oracle. Exponential oracles read `rate`;
/// the Pareto oracle reads `a` (lower bound) and `b` (shape); the Weibull2(2,2)
/// oracles read nothing.
struct OracleParams {
  double rate = 1.0;
  double a = 1.0;
  double b = 1.0;
};

/// Evaluates an oracle on the window (t1, t2); t2 may be +infinity. Residual
/// oracles read only t1. All forms are rearranged around the dominant
/// exponential (or power) so that far-tail windows do not cancel.
///
/// Throws WindowError for t1 >= t2 on interval oracles, t1 < 0, or a Pareto
/// window starting below `a`; ParameterError for invalid parameters.
double evaluate(OracleId id, const OracleParams& params, double t1, double t2);

// Direct entry points used by the measures dispatch.
double exponential_interval(double rate, double t1, double t2);
double exponential_weighted_interval(double rate, double t1, double t2);
double pareto_interval(double a, double b, double t1, double t2);
double weibull22_residual(double t);
double weibull22_weighted_interval(double t1, double t2);
double weibull22_weighted_residual(double t);

}  // namespace oracles
}  // namespace extropy

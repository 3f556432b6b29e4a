#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace extropy {

/// Half-open support [lower, upper); upper may be +infinity.
struct Support {
  double lower = 0.0;
  double upper = 0.0;

  bool contains(double x) const { return x >= lower && x < upper; }
};

class Distribution;

namespace family {

/// pdf rate * exp(-rate x).
struct Exponential {
  double rate;
};

/// cdf 1 - exp(-lambda x^alpha); lambda is a rate, not a scale.
struct Weibull2 {
  double alpha;
  double lambda;
};

/// log X ~ N(mu, sigma2).
struct Lognormal {
  double mu;
  double sigma2;
};

/// cdf 1 - (a / x)^b on (a, inf).
struct ParetoShifted {
  double a;
  double b;
};

/// Two-branch law on (0, 2) with a kink at x = 1:
/// F(x) = exp(-1/2 - 1/x) on (0, 1], exp(-2 + x^2 / 2) on [1, 2).
struct PiecewiseExample {};

/// Y = scale * X + shift.
struct LinearTransform {
  std::shared_ptr<const Distribution> base;
  double scale;
  double shift;
};

/// Renewal equilibrium law: f_Y(t) = survival_X(t) / E(X), t >= 0.
struct Equilibrium {
  std::shared_ptr<const Distribution> base;
  double base_mean;
};

}  // namespace family

using Family = std::variant<family::Exponential, family::Weibull2, family::Lognormal,
                            family::ParetoShifted, family::PiecewiseExample,
                            family::LinearTransform, family::Equilibrium>;

/// An immutable, validated lifetime distribution. Copies are cheap and safe to
/// share across threads.
class Distribution {
 public:
  static Distribution exponential(double rate);
  static Distribution weibull2(double alpha, double lambda);
  static Distribution lognormal(double mu, double sigma2);
  static Distribution pareto_shifted(double a, double b);
  static Distribution piecewise_example();

  double pdf(double x) const;
  double cdf(double x) const;
  double survival(double x) const;

  /// F(t2) - F(t1), evaluated on whichever side of the law loses less precision.
  double interval_mass(double t1, double t2) const;

  /// Throws InfiniteMeanError when E(X) diverges.
  double mean() const;
  bool has_finite_mean() const { return mean_.has_value(); }

  const Support& support() const { return support_; }
  /// Interior points where the pdf has a kink or jump.
  std::span<const double> knots() const { return knots_; }
  const Family& family() const { return family_; }

  /// Textual spec accepted by parse_distribution.
  std::string describe() const;

 private:
  Distribution(Family family, Support support, std::vector<double> knots);

  friend Distribution linear_transform(const Distribution& base, double a, double b);
  friend Distribution equilibrium(const Distribution& base);

  Family family_;
  Support support_;
  std::vector<double> knots_;
  std::optional<double> mean_;
};

/// Law of a * X + b. Requires a > 0 and b >= 0.
Distribution linear_transform(const Distribution& base, double a, double b);

/// Renewal equilibrium law of `base`. Requires a finite base mean.
Distribution equilibrium(const Distribution& base);

/// Parses `exp(rate=1)`, `weibull2(alpha=2,lambda=2)`, `lognormal(mu=0,sigma2=1)`,
/// `pareto_shifted(a=1,b=10)`, `piecewise_example()`, `lt(<spec>,a=..,b=..)` and
/// `eq(<spec>)`. Throws ParseError on malformed text and ParameterError or
/// InfiniteMeanError on invalid values.
Distribution parse_distribution(std::string_view text);

}  // namespace extropy

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "extropy/distribution.hpp"
#include "extropy/errors.hpp"
#include "extropy/quadrature.hpp"

using namespace extropy;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Distribution> families() {
  const auto wei = Distribution::weibull2(2.0, 2.0);
  return {Distribution::exponential(1.0),
          wei,
          Distribution::lognormal(0.0, 1.0),
          Distribution::pareto_shifted(1.0, 10.0),
          Distribution::piecewise_example(),
          Distribution::weibull2(0.7, 1.3),
          linear_transform(wei, 0.5, 1.0),
          equilibrium(wei)};
}

double sample_in_support(const Distribution& d, std::mt19937_64& rng) {
  const Support s = d.support();
  const double hi = std::isfinite(s.upper) ? s.upper : s.lower + 8.0;
  return std::uniform_real_distribution<double>(s.lower, hi)(rng);
}

}  // namespace

TEST_CASE("pdf examples") {
  CHECK(Distribution::exponential(1.0).pdf(0.0) == 1.0);
  CHECK(std::abs(Distribution::weibull2(2.0, 2.0).pdf(1.0) - 0.54134113294645076758) < 1e-15);

  // Both branch formulas meet at the knot.
  const double left = std::exp(-0.5 - 1.0) / 1.0;
  const double right = std::exp(-2.0 + 0.5) * 1.0;
  CHECK(std::abs(left - right) < 1e-16);
  const auto pw = Distribution::piecewise_example();
  CHECK(std::abs(pw.pdf(1.0) - std::exp(-1.5)) < 1e-15);
  CHECK(std::abs(pw.pdf(std::nextafter(1.0, 2.0)) - std::exp(-1.5)) < 1e-15);
  CHECK(pw.knots().size() == 1);
}

TEST_CASE("cdf examples") {
  CHECK(Distribution::exponential(1.0).cdf(kInf) == 1.0);
  CHECK(Distribution::pareto_shifted(1.0, 10.0).cdf(1.0) == 0.0);
  const auto pw = Distribution::piecewise_example();
  CHECK(std::abs(pw.cdf(2.0 - 1e-12) - 1.0) < 1e-11);
  CHECK(pw.cdf(2.0) == 1.0);
  CHECK(std::abs(pw.cdf(std::nextafter(1.0, 0.0)) - pw.cdf(std::nextafter(1.0, 2.0))) < 1e-15);
}

TEST_CASE("mean") {
  CHECK(Distribution::exponential(2.0).mean() == 0.5);
  const auto par = Distribution::pareto_shifted(1.0, 10.0);
  CHECK(std::abs(par.mean() - 10.0 / 9.0) < 1e-15);
  const double by_quadrature = 1.0 + integrate([&](double x) { return par.survival(x); }, 1.0, kInf).value;
  CHECK(std::abs(by_quadrature - 10.0 / 9.0) < 1e-10);

  CHECK_THROWS_AS(Distribution::pareto_shifted(1.0, 0.5).mean(), InfiniteMeanError);
  CHECK_FALSE(Distribution::pareto_shifted(1.0, 1.0).has_finite_mean());

  const auto wei = Distribution::weibull2(2.0, 2.0);
  CHECK(std::abs(wei.mean() - std::sqrt(std::numbers::pi / 8.0)) < 1e-15);
  CHECK(std::abs(Distribution::lognormal(0.0, 1.0).mean() - std::exp(0.5)) < 1e-15);
  // Quadrature path: mean of the piecewise law, against its own survival.
  const auto pw = Distribution::piecewise_example();
  const double pw_mean = integrate([&](double x) { return 1.0 - pw.cdf(x); }, 0.0, 2.0).value;
  CHECK(std::abs(pw.mean() - pw_mean) < 1e-12);
}

TEST_CASE("linear transform") {
  const auto e1 = Distribution::exponential(1.0);
  const auto id = linear_transform(e1, 1.0, 0.0);
  for (double x : {0.5, 1.0, 2.0}) CHECK(std::abs(id.pdf(x) - e1.pdf(x)) < 1e-14);

  // aX with X ~ Exp(lambda) is Exp(lambda / a); a = lambda gives Exp(1).
  const double lambda = 2.5;
  const auto scaled = linear_transform(Distribution::exponential(lambda), lambda, 0.0);
  for (double x : {0.5, 1.0, 2.0}) CHECK(std::abs(scaled.pdf(x) - std::exp(-x)) < 1e-14);

  const auto wei = Distribution::weibull2(2.0, 2.0);
  const auto y = linear_transform(wei, 2.0, 3.0);
  CHECK(y.cdf(5.0) == wei.cdf(1.0));
  CHECK(std::abs(y.cdf(5.0) - (1.0 - std::exp(-2.0))) < 1e-15);
  CHECK(y.support().lower == 3.0);
  CHECK(std::abs(y.mean() - (2.0 * wei.mean() + 3.0)) < 1e-15);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const double x = sample_in_support(y, rng);
    CHECK(y.cdf(x) == wei.cdf((x - 3.0) / 2.0));
  }

  const auto pw = linear_transform(Distribution::piecewise_example(), 2.0, 1.0);
  REQUIRE(pw.knots().size() == 1);
  CHECK(pw.knots()[0] == 3.0);

  CHECK_THROWS_AS(linear_transform(e1, 0.0, 0.0), ParameterError);
  CHECK_THROWS_AS(linear_transform(e1, -1.0, 0.0), ParameterError);
  CHECK_THROWS_AS(linear_transform(e1, 1.0, -0.5), ParameterError);
}

TEST_CASE("equilibrium") {
  for (double lambda : {0.5, 1.0, 3.0}) {
    const auto e = Distribution::exponential(lambda);
    const auto q = equilibrium(e);
    for (double t : {0.0, 0.3, 1.0, 4.0}) CHECK(std::abs(q.pdf(t) - e.pdf(t)) < 1e-14);
    for (double t : {0.3, 1.0, 4.0}) CHECK(std::abs(q.cdf(t) - e.cdf(t)) < 1e-10);
  }

  const auto wei = Distribution::weibull2(2.0, 2.0);
  const double mean = integrate([](double x) { return std::exp(-2.0 * x * x); }, 0.0, kInf).value;
  CHECK(std::abs(mean - std::sqrt(std::numbers::pi / 8.0)) < 1e-10);
  CHECK(std::abs(equilibrium(wei).pdf(0.0) - 1.0 / mean) < 1e-9);

  CHECK_THROWS_AS(equilibrium(Distribution::pareto_shifted(1.0, 0.5)), InfiniteMeanError);

  // Base support starting above zero: the equilibrium density is flat on [0, a).
  const auto par = Distribution::pareto_shifted(1.0, 10.0);
  const auto qp = equilibrium(par);
  CHECK(qp.support().lower == 0.0);
  CHECK(std::abs(qp.pdf(0.5) - 9.0 / 10.0) < 1e-15);
  // E(Y) = E(X^2) / (2 E(X)); E(X^2) = a^2 b / (b - 2).
  CHECK(std::abs(qp.mean() - (10.0 / 8.0) / (2.0 * 10.0 / 9.0)) < 1e-9);
  CHECK_FALSE(equilibrium(Distribution::pareto_shifted(1.0, 1.5)).has_finite_mean());
}

TEST_CASE("complement, sign and monotonicity invariants") {
  std::mt19937_64 rng(3);
  for (const auto& d : families()) {
    CAPTURE(d.describe());
    const int draws = std::holds_alternative<family::Equilibrium>(d.family()) ? 200 : 1000;
    std::vector<double> xs;
    for (int i = 0; i < draws; ++i) xs.push_back(sample_in_support(d, rng));
    std::sort(xs.begin(), xs.end());
    double prev = 0.0;
    for (double x : xs) {
      const double F = d.cdf(x);
      CHECK(std::abs(d.survival(x) + F - 1.0) < 1e-14);
      CHECK(d.pdf(x) >= 0.0);
      CHECK(F >= prev - 1e-15);
      prev = F;
    }
    CHECK(d.pdf(d.support().lower - 0.5) == 0.0);
    CHECK(d.cdf(d.support().lower) == doctest::Approx(0.0));
    if (std::isfinite(d.support().upper)) CHECK(d.pdf(d.support().upper + 0.1) == 0.0);
  }
}

TEST_CASE("pdf integrates to one") {
  for (const auto& d : families()) {
    CAPTURE(d.describe());
    const auto r = integrate([&](double x) { return d.pdf(x); }, d.support().lower, d.support().upper, {}, d.knots());
    CHECK(std::abs(r.value - 1.0) < 1e-8);
  }
}

TEST_CASE("interval mass stays accurate in the far tail") {
  const auto wei = Distribution::weibull2(2.0, 2.0);
  // F(4) rounds to 1 in double; the survival side keeps the mass.
  const double m = wei.interval_mass(4.0, 4.5);
  CHECK(m == doctest::Approx(std::exp(-32.0) - std::exp(-40.5)).epsilon(1e-14));
  CHECK(wei.interval_mass(1.0, kInf) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
  CHECK(Distribution::pareto_shifted(1.0, 10.0).interval_mass(0.0, 1.0) == 0.0);
  CHECK(Distribution::piecewise_example().interval_mass(2.0, 3.0) == 0.0);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(Distribution::exponential(0.0), ParameterError);
  CHECK_THROWS_AS(Distribution::exponential(std::nan("")), ParameterError);
  CHECK_THROWS_AS(Distribution::weibull2(-1.0, 1.0), ParameterError);
  CHECK_THROWS_AS(Distribution::weibull2(1.0, 0.0), ParameterError);
  CHECK_THROWS_AS(Distribution::lognormal(0.0, 0.0), ParameterError);
  CHECK_THROWS_AS(Distribution::lognormal(kInf, 1.0), ParameterError);
  CHECK_THROWS_AS(Distribution::pareto_shifted(0.0, 1.0), ParameterError);
  CHECK_THROWS_AS(Distribution::pareto_shifted(1.0, -2.0), ParameterError);
}

#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "extropy/errors.hpp"
#include "extropy/oracles.hpp"

using namespace extropy;
using oracles::OracleId;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// Composite Simpson on the standard normal density, independent of erfc.
double simpson_normal_tail(double z, double upper, long n) {
  const double h = (upper - z) / n;
  auto phi = [](double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); };
  // Kahan summation; 1e7 terms otherwise lose ~1e-12.
  double s = phi(z) + phi(upper);
  double carry = 0.0;
  for (long i = 1; i < n; ++i) {
    const double y = (i % 2 ? 4.0 : 2.0) * phi(z + i * h) - carry;
    const double t = s + y;
    carry = (t - s) - y;
    s = t;
  }
  return s * h / 3.0;
}
}  // namespace

TEST_CASE("standard normal survival") {
  CHECK(std_normal_survival(0.0) == 0.5);
  CHECK(std_normal_survival(40.0) >= 0.0);
  CHECK(std_normal_survival(40.0) < 1e-300);
  CHECK(std::abs(std_normal_survival(1.0) - simpson_normal_tail(1.0, 12.0, 10'000'000)) < 1e-13);

  // mpmath references at 40 digits.
  struct Ref {
    double z, value;
  };
  for (auto r : {Ref{1.0, 0.15865525393145705141}, Ref{3.0, 0.0013498980316300945267},
                 Ref{5.0, 2.8665157187919391167e-7}, Ref{8.0, 6.2209605742717841235e-16},
                 Ref{-3.0, 0.99865010196836990547}}) {
    CAPTURE(r.z);
    CHECK(std::abs(std_normal_survival(r.z) / r.value - 1.0) < 1e-14);
  }
  // Outside [-8, 8] the argument rounding grows like z^2 eps.
  CHECK(std::abs(std_normal_survival(20.0) / 2.7536241186062336951e-89 - 1.0) < 1e-12);

  for (double z = -8.0; z <= 8.0; z += 0.25) CHECK(std::abs(std_normal_survival(z) + std_normal_survival(-z) - 1.0) < 1e-14);
}

TEST_CASE("scaled survival is continuous across the continued-fraction switch") {
  const double below = std_normal_survival(4.999999) * std::exp(0.5 * 4.999999 * 4.999999);
  CHECK(std_normal_scaled_survival(5.0) == doctest::Approx(below).epsilon(1e-6));
  for (double z : {5.0, 6.0, 8.0, 12.0}) {
    const double direct = std_normal_survival(z) * std::exp(0.5 * z * z);
    CHECK(std_normal_scaled_survival(z) == doctest::Approx(direct).epsilon(1e-13));
  }
  // Both factors underflow at z = 60; the ratio is about 1 / (z sqrt(2 pi)).
  const double z = 60.0;
  CHECK(std_normal_scaled_survival(z) == doctest::Approx(1.0 / (z * std::sqrt(2.0 * std::numbers::pi))).epsilon(1e-3));
}

TEST_CASE("oracle values against mpmath quadrature") {
  CHECK(std::abs(oracles::evaluate(OracleId::exp_IJ, {.rate = 1.0}, 1.0, 2.0) - -0.54098835343466321219) < 1e-14);
  CHECK(std::abs(oracles::evaluate(OracleId::exp_IJw, {.rate = 1.0}, 1.0, 2.0) - -0.72680830831737834465) < 1e-14);
  CHECK(std::abs(oracles::evaluate(OracleId::weibull22_REx, {}, 1.0, kInf) - -1.1131692624952936448) < 1e-14);
  CHECK(std::abs(oracles::evaluate(OracleId::weibull22_IJw, {}, 0.5, 1.5) - -0.51796116617228659419) < 1e-14);
  CHECK(std::abs(oracles::evaluate(OracleId::pareto_IJ, {.a = 1.0, .b = 10.0}, 1.2, 2.0) - -2.0082968379294243292) <
        1e-13);
  CHECK(oracles::evaluate(OracleId::weibull22_wREx, {}, 1.5, kInf) == -2.5);
}

TEST_CASE("oracle limits and consistency") {
  // The exponential interval form tends to the constant residual extropy -rate/4.
  for (double rate : {0.5, 1.0, 3.0}) {
    const double t2 = 1.0 + std::log(1e10) / rate;
    CHECK(std::abs(oracles::exponential_interval(rate, 1.0, t2) + rate / 4.0) < 1e-8);
    CHECK(oracles::exponential_interval(rate, 1.0, kInf) == -rate / 4.0);
  }
  CHECK(std::abs(oracles::weibull22_residual(0.0) + std::sqrt(std::numbers::pi) / 4.0) < 1e-12);
  CHECK(oracles::weibull22_weighted_interval(0.7, kInf) == oracles::weibull22_weighted_residual(0.7));
  CHECK(oracles::pareto_interval(1.0, 10.0, 1.5, kInf) == doctest::Approx(-100.0 / (2.0 * 21.0 * 1.5)));
}

TEST_CASE("far-tail windows stay finite") {
  // Printed forms cancel to 0/0 here; rearranged forms do not.
  CHECK(std::isfinite(oracles::exponential_interval(1.0, 800.0, 801.0)));
  CHECK(oracles::exponential_interval(1.0, 800.0, 801.0) == doctest::Approx(oracles::exponential_interval(1.0, 0.0, 1.0)));
  CHECK(std::isfinite(oracles::exponential_weighted_interval(1.0, 800.0, 801.0)));
  CHECK(std::isfinite(oracles::weibull22_weighted_interval(20.0, 20.1)));
  const double r = oracles::weibull22_residual(9.0);
  CHECK(std::isfinite(r));
  CHECK(r < -9.0);
  CHECK(r > -9.1);
}

TEST_CASE("oracle window errors") {
  CHECK_THROWS_AS(oracles::evaluate(OracleId::exp_IJ, {}, 2.0, 2.0), WindowError);
  CHECK_THROWS_AS(oracles::evaluate(OracleId::weibull22_IJw, {}, 1.0, 0.5), WindowError);
  CHECK_THROWS_AS(oracles::evaluate(OracleId::pareto_IJ, {.a = 1.0, .b = 2.0}, 0.5, 2.0), WindowError);
  CHECK_THROWS_AS(oracles::evaluate(OracleId::exp_IJ, {.rate = -1.0}, 0.5, 2.0), ParameterError);
  CHECK(oracles::name(OracleId::weibull22_wREx) == "weibull22_wREx");
}

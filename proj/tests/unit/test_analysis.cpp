#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "extropy/analysis.hpp"
#include "extropy/errors.hpp"

using namespace extropy;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const MeasureOptions kQuad{.closed_forms = false};

const Distribution kExp1 = Distribution::exponential(1.0);
const Distribution kWei = Distribution::weibull2(2.0, 2.0);
const Distribution kLogn = Distribution::lognormal(0.0, 1.0);
const Distribution kPar = Distribution::pareto_shifted(1.0, 10.0);
const Distribution kPw = Distribution::piecewise_example();

std::vector<Distribution> families() { return {kExp1, kWei, kLogn, kPar, kPw}; }

// Interior window with 0 < F(t1) < F(t2) < 1.
TruncationWindow interior_window(const Distribution& d, std::mt19937_64& rng) {
  const double lo = d.support().lower;
  const double hi = std::isfinite(d.support().upper) ? d.support().upper : lo + 4.0;
  std::uniform_real_distribution<double> u(lo + 0.01, hi - 0.01);
  for (;;) {
    double a = u(rng), b = u(rng);
    if (a > b) std::swap(a, b);
    if (b - a > 0.02 && d.cdf(a) > 1e-6 && d.survival(b) > 1e-6) return TruncationWindow::make(d, a, b);
  }
}

}  // namespace

TEST_CASE("decomposition examples") {
  const auto r = decomposition(kExp1, TruncationWindow::make(kExp1, 1.0, 2.0));
  CHECK(r.residual_gap < 1e-8);
  CHECK(r.direct_value == -0.25);
  CHECK(std::abs(r.total + 0.25) < 1e-8);
  CHECK(decomposition(kWei, TruncationWindow::make(kWei, 0.5, 1.5)).residual_gap < 1e-8);
  CHECK(weighted_decomposition(kLogn, TruncationWindow::make(kLogn, 1.0, 4.0)).residual_gap < 1e-8);

  CHECK_THROWS_AS(decomposition(kPar, TruncationWindow::make(kPar, 1.0, 2.0)), WindowError);
  CHECK_THROWS_AS(decomposition(kExp1, TruncationWindow::make(kExp1, 1.0, kInf)), WindowError);
}

TEST_CASE("decomposition holds on random windows") {
  std::mt19937_64 rng(5);
  for (const auto& d : families()) {
    CAPTURE(d.describe());
    for (int i = 0; i < 50; ++i) {
      const auto w = interior_window(d, rng);
      for (const auto& r : {decomposition(d, w), weighted_decomposition(d, w)}) {
        CHECK(r.residual_gap < 1e-8);
        CHECK(r.past_term <= 0.0);
        CHECK(r.interval_term <= 0.0);
        CHECK(r.residual_term <= 0.0);
      }
    }
  }
}

TEST_CASE("bound check examples") {
  const auto w = TruncationWindow::make(kExp1, 1.0, 2.0);
  const auto b = bound_check(kExp1, w);
  CHECK(b.applicable);
  CHECK(b.certified_increasing);
  CHECK(std::abs(b.bound - -std::exp(-2.0) / (std::exp(-1.0) - std::exp(-2.0)) / 4.0) < 1e-14);
  CHECK(std::abs(b.value - -0.54098835343466321219) < 1e-14);
  CHECK(b.satisfied);

  // Past the interior maximum the piecewise law decreases in t2.
  const auto p = bound_check(kPw, TruncationWindow::make(kPw, 0.1, 1.9));
  CHECK_FALSE(p.applicable);
  CHECK(p.derivative < 0.0);

  const auto ww = weighted_bound_check(kWei, TruncationWindow::make(kWei, 0.5, 1.5));
  if (ww.applicable) CHECK(ww.satisfied);

  // Derivative identity behind the bound: dIJ/dt2 = -h2^2/2 - 2 h2 IJ.
  const auto wl = TruncationWindow::make(kLogn, 0.5, 2.0);
  const auto bl = bound_check(kLogn, wl);
  const double h2 = gfr(kLogn, wl, 2);
  CHECK(std::abs(bl.derivative - (-0.5 * h2 * h2 - 2.0 * h2 * bl.value)) < 1e-6);
}

TEST_CASE("certified-increasing windows satisfy the bounds") {
  std::mt19937_64 rng(9);
  for (const auto& d : families()) {
    CAPTURE(d.describe());
    for (int i = 0; i < 30; ++i) {
      const auto w = interior_window(d, rng);
      if (w.t2 - w.t1 < 1e-3) continue;
      for (const auto& b : {bound_check(d, w), weighted_bound_check(d, w)})
        if (b.certified_increasing) CHECK(b.value <= b.bound + kBoundSlack);
    }
  }
  CHECK_FALSE(bound_check(kExp1, TruncationWindow::make(kExp1, 1.0, kInf)).applicable);
}

TEST_CASE("linear transform identities") {
  CHECK(linear_transform_identity_gap(kExp1, 2.0, 3.0, 5.0, 7.0) < 1e-8);
  CHECK(linear_transform_identity_gap(kExp1, 1.0, 0.0, 1.0, 2.0, kQuad) < 1e-12);
  CHECK(weighted_linear_transform_identity_gap(kWei, 0.5, 1.0, 1.25, 1.75) < 1e-8);

  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> ua(0.5, 3.0), ub(0.0, 3.0);
  for (const auto& d : families()) {
    CAPTURE(d.describe());
    for (int i = 0; i < 50; ++i) {
      const double a = ua(rng), b = ub(rng);
      const auto wx = interior_window(d, rng);
      const double t1 = a * wx.t1 + b, t2 = a * wx.t2 + b;
      CHECK(linear_transform_identity_gap(d, a, b, t1, t2) < 1e-8);
      CHECK(weighted_linear_transform_identity_gap(d, a, b, t1, t2) < 1e-8);
    }
  }
}

TEST_CASE("exponential characterization") {
  const auto e2 = Distribution::exponential(2.0);
  CHECK(exponential_characterization_residual(e2, characterization_grid(e2)) < 1e-8);
  CHECK(exponential_characterization_residual(e2, characterization_grid(e2), kQuad) < 1e-8);
  CHECK(exponential_characterization_residual(kWei, characterization_grid(kWei)) > 1e-2);
  const auto scaled = linear_transform(kExp1, 3.0, 0.0);
  CHECK(exponential_characterization_residual(scaled, characterization_grid(scaled)) < 1e-8);

  const auto grid = characterization_grid(kPar);
  CHECK(grid.size() == 25);
  CHECK(grid.front().t1 == doctest::Approx(1.2));
  CHECK(grid.back().t2 == doctest::Approx(7.0));
}

TEST_CASE("limit horizon") {
  const double T = limit_horizon(kExp1, 5.0);
  CHECK(kExp1.survival(T) < 1e-7 * kExp1.survival(5.0));
  CHECK(limit_horizon(kPw, 1.5) == 2.0);
}

TEST_CASE("equilibrium interval extropy") {
  std::mt19937_64 rng(21);
  for (double rate : {0.5, 1.0, 3.0}) {
    const auto e = Distribution::exponential(rate);
    const auto q = equilibrium(e);
    for (int i = 0; i < 5; ++i) {
      const auto w = interior_window(e, rng);
      CHECK(std::abs(interval_extropy(q, TruncationWindow::make(q, w.t1, w.t2)).value -
                     interval_extropy(e, w).value) < 1e-8);
    }
  }
  const auto q = equilibrium(kWei);
  for (int i = 0; i < 10; ++i) {
    const auto w = interior_window(kWei, rng);
    const double generic = interval_extropy(q, TruncationWindow::make(q, w.t1, w.t2)).value;
    CHECK(std::abs(generic - equilibrium_interval_extropy_ratio(kWei, w.t1, w.t2).value) < 1e-8);
  }
}

TEST_CASE("scan verdicts") {
  const auto exp_scan = scan(kExp1, ScanDirection::vary_t1, 2.0, inset_grid(0.05, 1.95, 60, 0.0),
                             MeasureId::interval_extropy);
  CHECK(exp_scan.verdict == Monotonicity::decreasing);
  CHECK_FALSE(exp_scan.extremum.has_value());

  const auto par = scan(kPar, ScanDirection::vary_t1, 2.0, inset_grid(1.01, 1.99, 60, 0.0),
                        MeasureId::interval_extropy);
  CHECK(par.verdict == Monotonicity::non_monotone);
  REQUIRE(par.extremum.has_value());
  CHECK(par.extremum_is_maximum);
  CHECK(par.extremum->t > 1.01);
  CHECK(par.extremum->t < 1.99);

  const auto pw = scan(kPw, ScanDirection::vary_t2, 0.1, inset_grid(1.01, 1.99, 60, 0.0),
                       MeasureId::interval_extropy);
  CHECK(pw.verdict == Monotonicity::non_monotone);
  REQUIRE(pw.extremum.has_value());
  CHECK(pw.extremum->t == doctest::Approx(1.62).epsilon(0.03));

  const std::vector<double> bad{0.5, 1.5, 2.5};
  CHECK_THROWS_WITH_AS(scan(kExp1, ScanDirection::vary_t1, 2.0, bad, MeasureId::interval_extropy),
                       doctest::Contains("t = 2.5"), WindowError);
  CHECK_THROWS_AS(scan(kExp1, ScanDirection::vary_t1, 2.0, bad, MeasureId::extropy), std::invalid_argument);
}

TEST_CASE("classification honours the noise floor") {
  const std::vector<double> rising{0.0, 1.0, 2.0, 3.0};
  CHECK(classify(rising, 0.0) == Monotonicity::increasing);
  const std::vector<double> wobble{0.0, 1.0, 1.0 - 1e-12, 2.0};
  CHECK(classify(wobble, 0.0) == Monotonicity::non_monotone);
  CHECK(classify(wobble, 1e-10) == Monotonicity::increasing);
  const std::vector<double> flat{1.0, 1.0, 1.0};
  CHECK(classify(flat, 0.0) == Monotonicity::flat);
  CHECK(name(Monotonicity::non_monotone) == "non_monotone");
}

TEST_CASE("inset grid") {
  const auto g = inset_grid(1.0, 2.0, 5);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == doctest::Approx(1.001));
  CHECK(g.back() == doctest::Approx(1.999));
  CHECK_THROWS_AS(inset_grid(1.0, 1.001, 5), std::invalid_argument);
}


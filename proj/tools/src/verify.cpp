#include "extropy_cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <random>

#include <fmt/format.h>

#include "extropy/analysis.hpp"
#include "extropy/oracles.hpp"
#include "extropy_cli/figures.hpp"
#include "extropy_cli/sampling.hpp"

namespace extropy::cli {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Runner = std::function<CheckResult(const VerifySettings&)>;

struct CheckDef {
  Suite suite;
  const char* id;
  Runner run;
};

CheckResult below(const char* id, double gap, double threshold, std::string detail = {}) {
  return {id, gap, threshold, false, gap < threshold, std::move(detail)};
}

CheckResult above(const char* id, double value, double threshold, std::string detail = {}) {
  return {id, value, threshold, true, value > threshold, std::move(detail)};
}

MeasureOptions quadrature_only(const VerifySettings& s) {
  MeasureOptions o = s.options;
  o.closed_forms = false;
  return o;
}

double uniform(std::mt19937_64& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

// Closed form against the generic quadrature path on 100 random draws.
CheckResult oracle_check(const char* id, oracles::OracleId which, const VerifySettings& s) {
  std::mt19937_64 rng(1000 + static_cast<unsigned>(which));
  const MeasureOptions quad = quadrature_only(s);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    oracles::OracleParams p;
    double t1 = 0.0;
    double t2 = kInf;
    double numeric = 0.0;
    switch (which) {
      case oracles::OracleId::exp_IJ:
      case oracles::OracleId::exp_IJw: {
        p.rate = uniform(rng, 0.5, 3.0);
        t1 = uniform(rng, 0.0, 3.0);
        t2 = t1 + uniform(rng, 0.05, 3.0);
        const auto d = Distribution::exponential(p.rate);
        const auto w = TruncationWindow::make(d, t1, t2);
        numeric = which == oracles::OracleId::exp_IJ ? interval_extropy(d, w, quad).value
                                                     : weighted_interval_extropy(d, w, quad).value;
        break;
      }
      case oracles::OracleId::pareto_IJ: {
        p.a = uniform(rng, 0.5, 2.0);
        p.b = uniform(rng, 0.5, 10.0);
        t1 = p.a * uniform(rng, 1.0, 2.0);
        t2 = t1 + p.a * uniform(rng, 0.05, 2.0);
        const auto d = Distribution::pareto_shifted(p.a, p.b);
        numeric = interval_extropy(d, TruncationWindow::make(d, t1, t2), quad).value;
        break;
      }
      case oracles::OracleId::weibull22_REx:
      case oracles::OracleId::weibull22_wREx: {
        t1 = uniform(rng, 0.0, 2.5);
        const auto d = Distribution::weibull2(2.0, 2.0);
        numeric = which == oracles::OracleId::weibull22_REx ? residual_extropy(d, t1, quad).value
                                                            : weighted_residual_extropy(d, t1, quad).value;
        break;
      }
      case oracles::OracleId::weibull22_IJw: {
        t1 = uniform(rng, 0.0, 2.0);
        t2 = t1 + uniform(rng, 0.05, 2.0);
        const auto d = Distribution::weibull2(2.0, 2.0);
        numeric = weighted_interval_extropy(d, TruncationWindow::make(d, t1, t2), quad).value;
        break;
      }
    }
    worst = std::max(worst, std::abs(numeric - oracles::evaluate(which, p, t1, t2)));
  }
  return below(id, worst, scaled_threshold(1e-8, s.options.quadrature), "100 draws");
}

CheckResult weibull_weighted_residual_values(const VerifySettings& s) {
  const auto d = Distribution::weibull2(2.0, 2.0);
  const MeasureOptions quad = quadrature_only(s);
  double worst = 0.0;
  for (double t : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    const double exact = -t * t - 0.25;
    worst = std::max(worst, std::abs(weighted_residual_extropy(d, t, s.options).value - exact));
    worst = std::max(worst, std::abs(weighted_residual_extropy(d, t, quad).value - exact));
  }
  return below("example.weibull22_wREx", worst, scaled_threshold(1e-8, s.options.quadrature),
               "t in {0, 0.5, 1, 1.5, 2}");
}

std::vector<Distribution> engine_families() {
  auto fams = reference_families();
  const auto e = Distribution::exponential(2.0);
  fams.push_back(linear_transform(e, 2.0, 0.5));
  fams.push_back(equilibrium(Distribution::weibull2(2.0, 2.0)));
  fams.push_back(equilibrium(Distribution::pareto_shifted(1.0, 10.0)));
  return fams;
}

CheckResult panel_rule(const VerifySettings&) {
  const auto r = integrate_panel_rule_selfcheck();
  return below("engine.panel_rule", r.max_abs_error, 1e-15,
               fmt::format("{} monomials up to degree {}", r.cases, r.max_degree));
}

CheckResult normalization(const VerifySettings& s) {
  double worst = 0.0;
  for (const auto& d : engine_families()) {
    const auto r = integrate([&d](double x) { return d.pdf(x); }, d.support().lower, d.support().upper,
                             s.options.quadrature, d.knots());
    worst = std::max(worst, std::abs(r.value - 1.0));
  }
  return below("engine.normalization", worst, scaled_threshold(1e-8, s.options.quadrature));
}

CheckResult complement(const VerifySettings&) {
  std::mt19937_64 rng(77);
  double worst = 0.0;
  for (const auto& d : engine_families()) {
    const double lo = d.support().lower;
    const double hi = std::isfinite(d.support().upper) ? d.support().upper : lo + 8.0;
    for (int i = 0; i < 200; ++i) {
      const double x = uniform(rng, lo, hi);
      worst = std::max(worst, std::abs(d.cdf(x) + d.survival(x) - 1.0));
    }
  }
  return below("engine.complement", worst, 1e-14);
}

CheckResult decomposition_check(const char* id, bool weighted, const VerifySettings& s) {
  std::mt19937_64 rng(weighted ? 31 : 30);
  double worst = 0.0;
  for (const auto& d : reference_families())
    for (int i = 0; i < 50; ++i) {
      const auto w = random_interior_window(d, rng);
      const auto r = weighted ? weighted_decomposition(d, w, s.options) : decomposition(d, w, s.options);
      worst = std::max(worst, r.residual_gap);
    }
  return below(id, worst, scaled_threshold(1e-8, s.options.quadrature), "5 families x 50 windows");
}

CheckResult limits_check(const char* id, bool weighted, const VerifySettings& s) {
  const MeasureOptions& o = s.options;
  auto ij = [&](const Distribution& d, double a, double b) {
    const auto w = TruncationWindow::make(d, a, b);
    return weighted ? weighted_interval_extropy(d, w, o).value : interval_extropy(d, w, o).value;
  };
  double worst = 0.0;
  for (const auto& d : reference_families()) {
    const double lo = d.support().lower;
    for (double t : {lo + 0.3, lo + 0.8, lo + 1.5}) {
      const double residual = weighted ? weighted_residual_extropy(d, t, o).value : residual_extropy(d, t, o).value;
      const double past = weighted ? weighted_past_extropy(d, t, o).value : past_extropy(d, t, o).value;
      worst = std::max(worst, std::abs(ij(d, t, limit_horizon(d, t)) - residual));
      worst = std::max(worst, std::abs(ij(d, lo, t) - past));
    }
    const double global = weighted ? weighted_extropy(d, o).value : extropy(d, o).value;
    worst = std::max(worst, std::abs(ij(d, lo, limit_horizon(d, lo)) - global));
  }
  return below(id, worst, scaled_threshold(1e-6, o.quadrature), "residual, past and global limits");
}

CheckResult transform_check(const char* id, bool weighted, const VerifySettings& s) {
  std::mt19937_64 rng(weighted ? 41 : 40);
  double worst = 0.0;
  for (const auto& d : reference_families())
    for (int i = 0; i < 50; ++i) {
      const double a = uniform(rng, 0.5, 3.0);
      const double b = uniform(rng, 0.0, 3.0);
      const auto wx = random_interior_window(d, rng);
      const double t1 = a * wx.t1 + b;
      const double t2 = a * wx.t2 + b;
      worst = std::max(worst, weighted ? weighted_linear_transform_identity_gap(d, a, b, t1, t2, s.options)
                                       : linear_transform_identity_gap(d, a, b, t1, t2, s.options));
    }
  return below(id, worst, scaled_threshold(1e-8, s.options.quadrature), "5 families x 50 draws");
}

CheckResult characterization_exp(const VerifySettings& s) {
  double worst = 0.0;
  for (double rate : {0.5, 1.0, 3.0}) {
    const auto d = Distribution::exponential(rate);
    worst = std::max(worst, exponential_characterization_residual(d, characterization_grid(d), s.options));
  }
  return below("theorem.characterization_exponential", worst, scaled_threshold(1e-8, s.options.quadrature),
               "rates 0.5, 1, 3 over 25 windows");
}

CheckResult characterization_other(const VerifySettings& s) {
  double smallest = kInf;
  for (const auto& d : {Distribution::weibull2(2.0, 2.0), Distribution::lognormal(0.0, 1.0),
                        Distribution::pareto_shifted(1.0, 10.0)})
    smallest = std::min(smallest, exponential_characterization_residual(d, characterization_grid(d), s.options));
  return above("theorem.characterization_non_exponential", smallest, 1e-3, "smallest residual over 3 laws");
}

std::vector<std::pair<Distribution, TruncationWindow>> bound_windows() {
  std::vector<std::pair<Distribution, TruncationWindow>> out;
  std::mt19937_64 rng(50);
  for (const auto& d : reference_families()) {
    if (std::isinf(d.support().upper))
      for (const auto& w : characterization_grid(d)) out.emplace_back(d, w);
    for (int i = 0; i < 25; ++i) out.emplace_back(d, random_interior_window(d, rng));
  }
  return out;
}

CheckResult bound_check_all(const char* id, bool weighted, const VerifySettings& s) {
  double worst = 0.0;
  int certified = 0;
  int total = 0;
  for (const auto& [d, w] : bound_windows()) {
    const auto b = weighted ? weighted_bound_check(d, w, s.options) : bound_check(d, w, s.options);
    ++total;
    if (!b.certified_increasing) continue;
    ++certified;
    worst = std::max(worst, b.value - b.bound);
  }
  const double slack = scaled_threshold(kBoundSlack, s.options.quadrature);
  CheckResult r{id, worst, slack, false, worst <= slack, fmt::format("largest excess over the bound; {} of {} windows certified", certified, total)};
  return r;
}

CheckResult exponential_certified(const VerifySettings& s) {
  int missing = 0;
  int total = 0;
  for (double rate : {0.5, 1.0, 3.0}) {
    const auto d = Distribution::exponential(rate);
    for (const auto& w : characterization_grid(d)) {
      total += 2;
      missing += !bound_check(d, w, s.options).certified_increasing;
      missing += !weighted_bound_check(d, w, s.options).certified_increasing;
    }
  }
  return {"theorem.bound_exponential_certified", static_cast<double>(missing), 0.5, false, missing == 0,
          fmt::format("{} of {} windows not certified increasing", missing, total)};
}

CheckResult equilibrium_exp(const VerifySettings& s) {
  std::mt19937_64 rng(60);
  const double rates[] = {0.5, 1.0, 3.0};
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto e = Distribution::exponential(rates[i % 3]);
    const auto q = equilibrium(e);
    const auto w = random_interior_window(e, rng);
    worst = std::max(worst, std::abs(interval_extropy(q, TruncationWindow::make(q, w.t1, w.t2), s.options).value -
                                     interval_extropy(e, w, s.options).value));
  }
  return below("theorem.equilibrium_exponential", worst, scaled_threshold(1e-8, s.options.quadrature), "20 windows");
}

CheckResult equilibrium_ratio(const VerifySettings& s) {
  std::mt19937_64 rng(61);
  const auto base = Distribution::weibull2(2.0, 2.0);
  const auto q = equilibrium(base);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto w = random_interior_window(base, rng);
    const double generic = interval_extropy(q, TruncationWindow::make(q, w.t1, w.t2), s.options).value;
    worst = std::max(worst, std::abs(generic - equilibrium_interval_extropy_ratio(base, w.t1, w.t2, s.options).value));
  }
  return below("theorem.equilibrium_ratio", worst, scaled_threshold(1e-8, s.options.quadrature),
               "Weibull2(2,2), 20 windows");
}

// Passes when every series of the figure has the expected verdict (and, for
// `interior_max`, an interior maximum). max_gap reports the largest
// quadrature error estimate on the figure's grid.
CheckResult figure_shape(const char* check_id, std::string_view fig, Monotonicity expected, bool interior_max,
                         const VerifySettings& s) {
  const auto series = build_figure(*find_figure(fig), s.grid_points, s.options);
  bool ok = true;
  double err = 0.0;
  std::string verdicts;
  for (const auto& ser : series) {
    const auto& r = ser.report;
    ok = ok && r.verdict == expected && (!interior_max || (r.extremum && r.extremum_is_maximum));
    for (const auto& p : r.grid) err = std::max(err, p.error_estimate);
    verdicts += fmt::format("{}{}:{}", verdicts.empty() ? "" : " ", ser.label, name(r.verdict));
    if (interior_max && r.extremum) verdicts += fmt::format("@{:.4g}", r.extremum->t);
  }
  return {check_id, err, scaled_threshold(1e-8, s.options.quadrature), false,
          ok && err < scaled_threshold(1e-8, s.options.quadrature), verdicts};
}

const std::vector<CheckDef>& registry() {
  using O = oracles::OracleId;
  using M = Monotonicity;
  static const std::vector<CheckDef> checks{
      {Suite::oracles, "oracle.exp_IJ", [](auto& s) { return oracle_check("oracle.exp_IJ", O::exp_IJ, s); }},
      {Suite::oracles, "oracle.exp_IJw", [](auto& s) { return oracle_check("oracle.exp_IJw", O::exp_IJw, s); }},
      {Suite::oracles, "oracle.pareto_IJ", [](auto& s) { return oracle_check("oracle.pareto_IJ", O::pareto_IJ, s); }},
      {Suite::oracles, "oracle.weibull22_REx",
       [](auto& s) { return oracle_check("oracle.weibull22_REx", O::weibull22_REx, s); }},
      {Suite::oracles, "oracle.weibull22_IJw",
       [](auto& s) { return oracle_check("oracle.weibull22_IJw", O::weibull22_IJw, s); }},
      {Suite::oracles, "oracle.weibull22_wREx",
       [](auto& s) { return oracle_check("oracle.weibull22_wREx", O::weibull22_wREx, s); }},
      {Suite::oracles, "example.weibull22_wREx", weibull_weighted_residual_values},
      {Suite::oracles, "engine.panel_rule", panel_rule},
      {Suite::oracles, "engine.normalization", normalization},
      {Suite::oracles, "engine.complement", complement},
      {Suite::theorems, "theorem.decomposition",
       [](auto& s) { return decomposition_check("theorem.decomposition", false, s); }},
      {Suite::theorems, "theorem.weighted_decomposition",
       [](auto& s) { return decomposition_check("theorem.weighted_decomposition", true, s); }},
      {Suite::theorems, "theorem.limits", [](auto& s) { return limits_check("theorem.limits", false, s); }},
      {Suite::theorems, "theorem.weighted_limits",
       [](auto& s) { return limits_check("theorem.weighted_limits", true, s); }},
      {Suite::theorems, "theorem.transform", [](auto& s) { return transform_check("theorem.transform", false, s); }},
      {Suite::theorems, "theorem.weighted_transform",
       [](auto& s) { return transform_check("theorem.weighted_transform", true, s); }},
      {Suite::theorems, "theorem.characterization_exponential", characterization_exp},
      {Suite::theorems, "theorem.characterization_non_exponential", characterization_other},
      {Suite::theorems, "theorem.bound", [](auto& s) { return bound_check_all("theorem.bound", false, s); }},
      {Suite::theorems, "theorem.weighted_bound",
       [](auto& s) { return bound_check_all("theorem.weighted_bound", true, s); }},
      {Suite::theorems, "theorem.bound_exponential_certified", exponential_certified},
      {Suite::theorems, "theorem.equilibrium_exponential", equilibrium_exp},
      {Suite::theorems, "theorem.equilibrium_ratio", equilibrium_ratio},
      {Suite::figures, "figure.fig1a", [](auto& s) { return figure_shape("figure.fig1a", "fig1a", M::decreasing, false, s); }},
      {Suite::figures, "figure.fig1b", [](auto& s) { return figure_shape("figure.fig1b", "fig1b", M::increasing, false, s); }},
      {Suite::figures, "figure.fig2a", [](auto& s) { return figure_shape("figure.fig2a", "fig2a", M::decreasing, false, s); }},
      {Suite::figures, "figure.fig2b", [](auto& s) { return figure_shape("figure.fig2b", "fig2b", M::increasing, false, s); }},
      {Suite::figures, "figure.fig3a", [](auto& s) { return figure_shape("figure.fig3a", "fig3a", M::decreasing, false, s); }},
      {Suite::figures, "figure.fig3b", [](auto& s) { return figure_shape("figure.fig3b", "fig3b", M::increasing, false, s); }},
      {Suite::figures, "figure.fig4", [](auto& s) { return figure_shape("figure.fig4", "fig4", M::non_monotone, true, s); }},
      {Suite::figures, "figure.fig5", [](auto& s) { return figure_shape("figure.fig5", "fig5", M::non_monotone, false, s); }},
  };
  return checks;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view text) {
  if (text == "all") return Suite::all;
  if (text == "oracles") return Suite::oracles;
  if (text == "theorems") return Suite::theorems;
  if (text == "figures") return Suite::figures;
  return std::nullopt;
}

double scaled_threshold(double base, const QuadratureConfig& q) {
  return std::max(base, 100.0 * std::max(q.abs_tol, q.rel_tol));
}

std::vector<CheckResult> run_verify(Suite suite, const VerifySettings& settings) {
  std::vector<CheckResult> out;
  for (const auto& c : registry()) {
    if (suite != Suite::all && c.suite != suite) continue;
    try {
      out.push_back(c.run(settings));
    } catch (const std::exception& e) {
      out.push_back({c.id, std::numeric_limits<double>::quiet_NaN(), 0.0, false, false, e.what()});
    }
  }
  return out;
}

}  // namespace extropy::cli

#include "extropy_cli/figures.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "json.hpp"

namespace extropy::cli {

const std::vector<FigureSpec>& figure_table() {
  using enum ScanDirection;
  constexpr auto ij = MeasureId::interval_extropy;
  constexpr auto ijw = MeasureId::weighted_interval_extropy;
  static const std::vector<FigureSpec> table{
      {"fig1a", "fig-exp(a)", "exp(rate=1)", ij, vary_t1, {2, 3, 4, 5}, {}},
      {"fig1b", "fig-exp(b)", "exp(rate=1)", ij, vary_t2, {2, 3, 4, 5}, {}},
      {"fig2a", "fig-wei2(a)", "weibull2(alpha=2,lambda=2)", ij, vary_t1, {1, 2, 3, 4}, {}},
      {"fig2b", "fig-wei2(b)", "weibull2(alpha=2,lambda=2)", ij, vary_t2, {1, 2, 3, 4}, {}},
      {"fig3a", "fig-logn(a)", "lognormal(mu=0,sigma2=1)", ij, vary_t1, {1, 2, 3, 4}, {}},
      {"fig3b", "fig-logn(b)", "lognormal(mu=0,sigma2=1)", ij, vary_t2, {1, 2, 3, 4}, {}},
      {"fig4", "fignew", "pareto_shifted(a=1,b=10)", ij, vary_t1, {2, 3, 4, 5}, {}},
      {"fig5", "fignew2", "piecewise_example()", ij, vary_t2, {0.1}, std::pair{1.0, 2.0}},
      {"fig6a", "fig-expw(a)", "exp(rate=1)", ijw, vary_t1, {2, 3, 4, 5}, {}},
      {"fig6b", "fig-expw(b)", "exp(rate=1)", ijw, vary_t2, {2, 3, 4, 5}, {}},
      {"fig7a", "fig-wei2w(a)", "weibull2(alpha=2,lambda=2)", ijw, vary_t1, {1, 2, 3, 4}, {}},
      {"fig7b", "fig-wei2w(b)", "weibull2(alpha=2,lambda=2)", ijw, vary_t2, {1, 2, 3, 4}, {}},
      {"fig8a", "fig-lognw(a)", "lognormal(mu=0,sigma2=1)", ijw, vary_t1, {1, 2, 3, 4}, {}},
      {"fig8b", "fig-lognw(b)", "lognormal(mu=0,sigma2=1)", ijw, vary_t2, {1, 2, 3, 4}, {}},
  };
  return table;
}

const FigureSpec* find_figure(std::string_view id) {
  const auto& t = figure_table();
  auto it = std::find_if(t.begin(), t.end(), [id](const FigureSpec& s) { return s.id == id; });
  return it == t.end() ? nullptr : &*it;
}

std::pair<double, double> series_range(const FigureSpec& spec, const Distribution& d, double fixed) {
  if (spec.range) return *spec.range;
  if (spec.direction == ScanDirection::vary_t1) return {d.support().lower, fixed};
  return {fixed, *std::max_element(spec.fixed.begin(), spec.fixed.end()) + 3.0};
}

std::vector<FigureSeries> build_figure(const FigureSpec& spec, int grid_points, const MeasureOptions& opt) {
  const Distribution d = parse_distribution(spec.dist_spec);
  const char* key = spec.direction == ScanDirection::vary_t1 ? "t2" : "t1";
  std::vector<FigureSeries> out;
  out.reserve(spec.fixed.size());
  for (double fixed : spec.fixed) {
    const auto [lo, hi] = series_range(spec, d, fixed);
    const auto grid = inset_grid(lo, hi, grid_points, kFigureInset);
    out.push_back({fmt::format("{}={}", key, fixed), scan(d, spec.direction, fixed, grid, spec.measure, opt)});
  }
  return out;
}

void write_figure_csv(std::ostream& out, const std::vector<FigureSeries>& series) {
  fmt::memory_buffer buf;
  fmt::format_to(std::back_inserter(buf), "series_label,t,value\n");
  for (const auto& s : series)
    for (const auto& p : s.report.grid) fmt::format_to(std::back_inserter(buf), "{},{:.17g},{:.17g}\n", s.label, p.t, p.value);
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

void write_figure_json(std::ostream& out, const std::vector<FigureSeries>& series) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& s : series)
    for (const auto& p : s.report.grid) rows.push_back({{"series_label", s.label}, {"t", p.t}, {"value", p.value}});
  out << rows.dump(2) << '\n';
}

}  // namespace extropy::cli

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "extropy/analysis.hpp"

namespace extropy::cli {

struct FigureSpec {
  std::string_view id;
  std::string_view source_label;
  std::string_view dist_spec;
  MeasureId measure;
  ScanDirection direction;
  std::vector<double> fixed;
  /// Range of the varied endpoint when the caption gives one.
  std::optional<std::pair<double, double>> range;
};

inline constexpr int kDefaultGridPoints = 400;
inline constexpr double kFigureInset = 1e-3;

const std::vector<FigureSpec>& figure_table();
/// nullptr for an unknown id.
const FigureSpec* find_figure(std::string_view id);

struct FigureSeries {
  std::string label;
  ScanReport report;
};

/// Range of the varied endpoint before the inset. vary_t1 runs from the
/// support's lower bound to the fixed t2; vary_t2 runs from the fixed t1 to
/// three units past the largest fixed value.
std::pair<double, double> series_range(const FigureSpec& spec, const Distribution& d, double fixed);

std::vector<FigureSeries> build_figure(const FigureSpec& spec, int grid_points, const MeasureOptions& opt);

/// `series_label,t,value`, values printed with 17 significant digits.
void write_figure_csv(std::ostream& out, const std::vector<FigureSeries>& series);
void write_figure_json(std::ostream& out, const std::vector<FigureSeries>& series);

}  // namespace extropy::cli

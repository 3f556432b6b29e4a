#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "extropy/measures.hpp"

namespace extropy::cli {

enum class Suite { all, oracles, theorems, figures };

std::optional<Suite> parse_suite(std::string_view text);

struct CheckResult {
  std::string id;
  /// Largest gap observed (or the smallest residual for lower-bound checks).
  double max_gap = 0.0;
  double threshold = 0.0;
  /// Pass means max_gap > threshold instead of max_gap < threshold.
  bool lower_bound = false;
  bool pass = false;
  std::string detail;
};

struct VerifySettings {
  MeasureOptions options{};
  int grid_points = 400;
};

/// Assertion threshold under the engine tolerances: max(base, 100 * max(abs_tol, rel_tol)).
double scaled_threshold(double base, const QuadratureConfig& q);

/// Runs every check of `suite` in a fixed order with fixed seeds. A check that
/// throws is reported as failed with the message in `detail`.
std::vector<CheckResult> run_verify(Suite suite, const VerifySettings& settings);

}  // namespace extropy::cli

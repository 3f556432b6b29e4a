#pragma once

#include <random>
#include <vector>

#include "extropy/measures.hpp"

namespace extropy::cli {

/// Exponential(1), Weibull2(2,2), Lognormal(0,1), ParetoShifted(1,10) and the
/// piecewise example.
std::vector<Distribution> reference_families();

/// Window with 0 < F(t1) < F(t2) < 1, drawn uniformly from the first four
/// units of the support and at least 0.02 wide.
TruncationWindow random_interior_window(const Distribution& d, std::mt19937_64& rng);

}  // namespace extropy::cli

#include "extropy_cli/sampling.hpp"

#include <cmath>
#include <utility>

namespace extropy::cli {

std::vector<Distribution> reference_families() {
  return {Distribution::exponential(1.0), Distribution::weibull2(2.0, 2.0), Distribution::lognormal(0.0, 1.0),
          Distribution::pareto_shifted(1.0, 10.0), Distribution::piecewise_example()};
}

TruncationWindow random_interior_window(const Distribution& d, std::mt19937_64& rng) {
  const double lo = d.support().lower;
  const double hi = std::isfinite(d.support().upper) ? d.support().upper : lo + 4.0;
  std::uniform_real_distribution<double> u(lo + 0.01, hi - 0.01);
  for (;;) {
    double a = u(rng);
    double b = u(rng);
    if (a > b) std::swap(a, b);
    if (b - a > 0.02 && d.cdf(a) > 1e-6 && d.survival(b) > 1e-6) return TruncationWindow::make(d, a, b);
  }
}

}  // namespace extropy::cli

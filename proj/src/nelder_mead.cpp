#include "hawkesflow/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hawkesflow {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

}  // namespace

NelderMeadResult nelder_mead_minimize(
    const std::function<double(const std::vector<double>&)>& objective,
    std::vector<double> start, const std::vector<double>& steps,
    const NelderMeadOptions& options) {
  const std::size_t n = start.size();
  if (n == 0 || steps.size() != n) {
    throw std::invalid_argument("nelder_mead: start/steps size mismatch");
  }

  NelderMeadResult result;
  auto f = [&](const std::vector<double>& x) {
    ++result.evals;
    const double v = objective(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };

  // Initial simplex: start plus one step along each axis.
  std::vector<std::vector<double>> simplex(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += steps[i];
  std::vector<double> fvals(n + 1);
  for (std::size_t i = 0; i <= n; ++i) fvals[i] = f(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto sort_order = [&] {
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fvals[a] < fvals[b]; });
  };
  sort_order();

  std::vector<double> centroid(n), reflected(n), expanded(n), contracted(n);
  double spread = std::numeric_limits<double>::infinity();

  while (result.evals < options.max_evals) {
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[n - 1];

    spread = (fvals[worst] - fvals[best]) / (std::abs(fvals[best]) + 1.0);
    if (!std::isfinite(fvals[worst])) {
      spread = std::numeric_limits<double>::infinity();
    }
    if (spread <= options.f_tolerance) {
      result.converged = true;
      break;
    }

    // Centroid of all but the worst vertex.
    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t d = 0; d < n; ++d) centroid[d] += simplex[i][d];
    }
    for (std::size_t d = 0; d < n; ++d) centroid[d] /= static_cast<double>(n);

    for (std::size_t d = 0; d < n; ++d) {
      reflected[d] = centroid[d] + kReflect * (centroid[d] - simplex[worst][d]);
    }
    const double fr = f(reflected);

    if (fr < fvals[best]) {
      for (std::size_t d = 0; d < n; ++d) {
        expanded[d] = centroid[d] + kExpand * (reflected[d] - centroid[d]);
      }
      const double fe = f(expanded);
      if (fe < fr) {
        simplex[worst] = expanded;
        fvals[worst] = fe;
      } else {
        simplex[worst] = reflected;
        fvals[worst] = fr;
      }
    } else if (fr < fvals[second_worst]) {
      simplex[worst] = reflected;
      fvals[worst] = fr;
    } else {
      const bool outside = fr < fvals[worst];
      const std::vector<double>& toward = outside ? reflected : simplex[worst];
      for (std::size_t d = 0; d < n; ++d) {
        contracted[d] = centroid[d] + kContract * (toward[d] - centroid[d]);
      }
      const double fc = f(contracted);
      if (fc < (outside ? fr : fvals[worst])) {
        simplex[worst] = contracted;
        fvals[worst] = fc;
      } else {
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == order.front()) continue;
          for (std::size_t d = 0; d < n; ++d) {
            simplex[i][d] = simplex[order.front()][d] +
                            kShrink * (simplex[i][d] - simplex[order.front()][d]);
          }
          fvals[i] = f(simplex[i]);
        }
      }
    }

    sort_order();
    ++result.iterations;
    result.best_trace.push_back(fvals[order.front()]);
  }

  sort_order();
  result.x = simplex[order.front()];
  result.fx = fvals[order.front()];
  result.final_spread = spread;
  return result;
}

}  // namespace hawkesflow

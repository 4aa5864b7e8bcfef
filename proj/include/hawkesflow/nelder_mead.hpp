#pragma once

#include <functional>
#include <vector>

namespace hawkesflow {

struct NelderMeadOptions {
  int max_evals = 6000;
  // Converged when (f_worst - f_best) / (|f_best| + 1) drops below this.
  double f_tolerance = 1e-9;
};

struct NelderMeadResult {
  std::vector<double> x;
  double fx = 0.0;
  int iterations = 0;
  int evals = 0;
  bool converged = false;
  double final_spread = 0.0;
  // Best objective after each iteration; non-increasing by construction.
  std::vector<double> best_trace;
};

// Downhill simplex minimizer, standard reflection/expansion/contraction/
// shrink coefficients. Non-finite objective values are treated as +inf.
NelderMeadResult nelder_mead_minimize(
    const std::function<double(const std::vector<double>&)>& objective,
    std::vector<double> start, const std::vector<double>& steps,
    const NelderMeadOptions& options = {});

}  // namespace hawkesflow

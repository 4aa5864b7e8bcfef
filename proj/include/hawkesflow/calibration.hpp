#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hawkesflow/intensity.hpp"
#include "hawkesflow/model.hpp"

namespace hawkesflow {

struct FitConfig {
  KernelForm kernel_form = KernelForm::DifferenceOfExponentials;
  int max_iterations = 6000;      // objective evaluations per restart
  double tolerance = 1e-9;        // relative objective change at convergence
  double parameter_floor = 1e-6;  // epsilon for positivity / beta-alpha gap
  int restarts = 5;
  std::uint64_t seed = 0;
};

struct FitResult {
  ModelTheta theta;
  double log_likelihood = 0.0;
  bool converged = false;
  int iterations = 0;
  double simplex_size = 0.0;  // final relative objective spread
  int restart_index = 0;
  // Kernel masses of this side's two channels at the per-side median marks
  // of the fitted stream; one row of the Q matrix.
  std::array<double, 2> q_row{0.0, 0.0};
  std::array<double, 2> median_marks{0.0, 0.0};
};

// Unconstrained optimizer coordinates <-> constrained ModelTheta.
// Raw layout for m knots: raw[0..m-1] log knot values, then per source
// channel (buy first) log k, b, log alpha, log(beta - alpha - eps).
// The map is total: any finite raw vector yields a valid theta.
ModelTheta transform_parameters(std::span<const double> raw, Side target,
                                const SessionWindow& window, KernelForm form,
                                double eps);
std::vector<double> untransform_parameters(const ModelTheta& theta, double eps);

// Eq-style per-side log-likelihood over [0, horizon]:
//   -integral of lambda_i + sum over target events of log lambda_i.
// events_all carries both sides; cross-excitation drives lambda_i.
// Returns -inf when lambda_i <= 0 at a target event.
double log_likelihood(const ModelTheta& theta,
                      std::span<const MarkedEvent> events_all, double horizon);

// Maximum likelihood fit of one side's 12 parameters over one session.
// Deterministic given config.seed. Requires >= 50 target-side events.
FitResult fit(std::span<const MarkedEvent> events_all, Side side,
              const SessionWindow& session, const FitConfig& config);

}  // namespace hawkesflow

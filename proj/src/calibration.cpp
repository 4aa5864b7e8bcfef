#include "hawkesflow/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "hawkesflow/nelder_mead.hpp"
#include "hawkesflow/rng.hpp"

namespace hawkesflow {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Keeps exp() finite for any raw input; the map must be total.
double clamped_exp(double x) { return std::exp(std::clamp(x, -700.0, 700.0)); }

double safe_log(double x) { return std::log(std::max(x, 1e-300)); }

}  // namespace

ModelTheta transform_parameters(std::span<const double> raw, Side target,
                                const SessionWindow& window, KernelForm form,
                                double eps) {
  const std::size_t m = window.knots().size();
  if (raw.size() != m + 8) {
    throw invalid_params("raw parameter vector must have " +
                         std::to_string(m + 8) + " entries");
  }
  std::vector<double> values(m);
  for (std::size_t i = 0; i < m; ++i) values[i] = clamped_exp(raw[i]);

  auto channel = [&](std::size_t base) {
    const double k = clamped_exp(raw[base]);
    const double b = raw[base + 1];
    const double alpha = clamped_exp(raw[base + 2]);
    const double beta = alpha + eps + clamped_exp(raw[base + 3]);
    return KernelParams(k, b, alpha, beta, form);
  };

  return ModelTheta{target,
                    {channel(m), channel(m + 4)},
                    BaselineSpline(window, std::move(values))};
}

std::vector<double> untransform_parameters(const ModelTheta& theta,
                                           double eps) {
  const auto& values = theta.baseline.values();
  std::vector<double> raw;
  raw.reserve(values.size() + 8);
  for (double v : values) raw.push_back(safe_log(v));
  for (int j = 0; j < 2; ++j) {
    const KernelParams& ker = theta.kernels[j];
    raw.push_back(safe_log(ker.k()));
    raw.push_back(ker.b());
    raw.push_back(safe_log(ker.alpha()));
    raw.push_back(safe_log(ker.beta() - ker.alpha() - eps));
  }
  return raw;
}

double log_likelihood(const ModelTheta& theta,
                      std::span<const MarkedEvent> events_all, double horizon) {
  require_sorted(events_all);
  if (horizon < 0.0 || horizon > theta.baseline.window().length()) {
    throw out_of_session("likelihood horizon outside the session window");
  }

  DecayState state(theta);
  double excitation_compensator = 0.0;
  double log_sum = 0.0;

  std::size_t i = 0;
  const std::size_t n = events_all.size();
  while (i < n && events_all[i].t < horizon) {
    const double t = events_all[i].t;
    excitation_compensator += state.excitation_integral_to(t);
    state.decay_to(t);

    std::size_t j = i;
    std::optional<double> lambda;  // shared by a same-timestamp group
    while (j < n && events_all[j].t == t) {
      if (events_all[j].side == theta.target) {
        if (!lambda) lambda = theta.baseline.eval(t) + state.excitation();
        if (!(*lambda > 0.0)) return kNegInf;
        log_sum += std::log(*lambda);
      }
      ++j;
    }
    for (std::size_t m = i; m < j; ++m) state.add_event(events_all[m]);
    i = j;
  }
  excitation_compensator += state.excitation_integral_to(horizon);

  const double comp = theta.baseline.integral(0.0, horizon) + excitation_compensator;
  return -comp + log_sum;
}

FitResult fit(std::span<const MarkedEvent> events_all, Side side,
              const SessionWindow& session, const FitConfig& config) {
  require_sorted(events_all);
  const std::size_t n_target = count_side(events_all, side);
  if (n_target < 50) {
    throw insufficient_events("need >= 50 " + std::string(to_string(side)) +
                              " events to fit, got " +
                              std::to_string(n_target));
  }
  if (config.restarts < 1 || !(config.tolerance > 0.0)) {
    throw invalid_params("fit config needs restarts >= 1 and tolerance > 0");
  }

  const double horizon = session.length();
  const double eps = config.parameter_floor;
  const std::size_t m = session.knots().size();
  const std::size_t dims = m + 8;

  // Canonical start: knots at the side's empirical rate, k at half of it,
  // decays at (0.05, 0.5) per second, no mark effect.
  const double rate = std::max(static_cast<double>(n_target) / horizon, 1e-5);
  std::vector<double> start(dims);
  for (std::size_t i = 0; i < m; ++i) start[i] = std::log(rate);
  for (int j = 0; j < 2; ++j) {
    const std::size_t base = m + 4 * static_cast<std::size_t>(j);
    start[base] = std::log(0.5 * rate);
    start[base + 1] = 0.0;
    start[base + 2] = std::log(0.05);
    start[base + 3] = std::log(0.5 - 0.05 - eps);
  }

  std::vector<double> steps(dims, 0.3);
  for (int j = 0; j < 2; ++j) steps[m + 4 * static_cast<std::size_t>(j) + 1] = 0.01;

  auto objective = [&](const std::vector<double>& raw) {
    const ModelTheta theta =
        transform_parameters(raw, side, session, config.kernel_form, eps);
    return -log_likelihood(theta, events_all, horizon);
  };

  NelderMeadOptions options;
  options.max_evals = config.max_iterations;
  options.f_tolerance = config.tolerance;

  std::optional<NelderMeadResult> best;
  int best_restart = 0;
  for (int s = 0; s < config.restarts; ++s) {
    std::vector<double> x0 = start;
    if (s > 0) {
      Rng rng(mix_seed(config.seed, static_cast<std::uint64_t>(s)));
      for (std::size_t d = 0; d < dims; ++d) {
        const bool is_b = d >= m && ((d - m) % 4 == 1);
        x0[d] += rng.uniform(is_b ? -0.02 : -0.8, is_b ? 0.02 : 0.8);
      }
    }
    NelderMeadResult run = nelder_mead_minimize(objective, x0, steps, options);
    if (!best || run.fx < best->fx) {
      best = std::move(run);
      best_restart = s;
    }
  }

  FitResult result{
      .theta = transform_parameters(best->x, side, session, config.kernel_form,
                                    eps),
      .log_likelihood = -best->fx,
      .converged = best->converged,
      .iterations = best->iterations,
      .simplex_size = best->final_spread,
      .restart_index = best_restart,
  };
  result.median_marks = median_volumes(events_all);
  result.q_row = {result.theta.kernels[0].l1_mass(result.median_marks[0]),
                  result.theta.kernels[1].l1_mass(result.median_marks[1])};
  return result;
}

}  // namespace hawkesflow

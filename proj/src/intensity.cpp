#include "hawkesflow/intensity.hpp"

#include <cmath>
#include <string>

namespace hawkesflow {

DecayState::DecayState(const ModelTheta& theta)
    : sign_(theta.kernels[0].form() == KernelForm::DifferenceOfExponentials
                ? -1.0
                : 1.0) {
  for (int j = 0; j < 2; ++j) {
    k_[j] = theta.kernels[j].k();
    b_[j] = theta.kernels[j].b();
    alpha_[j] = theta.kernels[j].alpha();
    beta_[j] = theta.kernels[j].beta();
  }
}

void DecayState::decay_to(double t) {
  const double dt = t - t_;
  if (dt < 0.0) {
    throw time_regression("decay state asked to move backwards in time");
  }
  if (dt == 0.0) return;
  for (int j = 0; j < 2; ++j) {
    slow_[j] *= std::exp(-alpha_[j] * dt);
    fast_[j] *= std::exp(-beta_[j] * dt);
  }
  t_ = t;
}

void DecayState::add_event(const MarkedEvent& e) {
  const int j = side_index(e.side);
  const double deposit = std::exp(b_[j] * e.volume);
  slow_[j] += deposit;
  fast_[j] += deposit;
}

void DecayState::advance(const MarkedEvent& e) {
  decay_to(e.t);
  add_event(e);
}

double DecayState::excitation() const {
  return k_[0] * (slow_[0] + sign_ * fast_[0]) +
         k_[1] * (slow_[1] + sign_ * fast_[1]);
}

double DecayState::excitation_integral_to(double t1) const {
  const double dt = t1 - t_;
  if (dt < 0.0) {
    throw reversed_interval("excitation integral over a reversed interval");
  }
  double total = 0.0;
  for (int j = 0; j < 2; ++j) {
    const double slow_part = slow_[j] * -std::expm1(-alpha_[j] * dt) / alpha_[j];
    const double fast_part = fast_[j] * -std::expm1(-beta_[j] * dt) / beta_[j];
    total += k_[j] * (slow_part + sign_ * fast_part);
  }
  return total;
}

double intensity_at(const ModelTheta& theta,
                    std::span<const MarkedEvent> history, double t) {
  require_sorted(history);
  double lambda = theta.baseline.eval(t);
  for (const auto& e : history) {
    if (e.t >= t) break;  // left continuity: events at exactly t excluded
    lambda += theta.channel(e.side).eval(t - e.t, e.volume);
  }
  return lambda;
}

std::vector<double> intensities_at_events(const ModelTheta& theta,
                                          std::span<const MarkedEvent> events) {
  require_sorted(events);
  std::vector<double> lambdas(events.size());
  DecayState state(theta);
  std::size_t i = 0;
  while (i < events.size()) {
    state.decay_to(events[i].t);
    const double lambda = theta.baseline.eval(events[i].t) + state.excitation();
    // Events sharing a timestamp see the same pre-jump intensity.
    std::size_t j = i;
    while (j < events.size() && events[j].t == events[i].t) {
      lambdas[j] = lambda;
      ++j;
    }
    for (std::size_t m = i; m < j; ++m) state.add_event(events[m]);
    i = j;
  }
  return lambdas;
}

double compensator(const ModelTheta& theta,
                   std::span<const MarkedEvent> events, double t0, double t1) {
  if (t1 < t0) {
    throw reversed_interval("compensator over a reversed interval: [" +
                            std::to_string(t0) + ", " + std::to_string(t1) + "]");
  }
  require_sorted(events);
  double total = theta.baseline.integral(t0, t1);
  const double sign =
      theta.kernels[0].form() == KernelForm::DifferenceOfExponentials ? -1.0
                                                                      : 1.0;
  for (const auto& e : events) {
    if (e.t >= t1) break;
    const KernelParams& ker = theta.channel(e.side);
    const double a = std::max(t0 - e.t, 0.0);
    const double b = t1 - e.t;
    const double slow_part =
        (std::exp(-ker.alpha() * a) - std::exp(-ker.alpha() * b)) / ker.alpha();
    const double fast_part =
        (std::exp(-ker.beta() * a) - std::exp(-ker.beta() * b)) / ker.beta();
    total += ker.k() * std::exp(ker.b() * e.volume) * (slow_part + sign * fast_part);
  }
  return total;
}

}  // namespace hawkesflow

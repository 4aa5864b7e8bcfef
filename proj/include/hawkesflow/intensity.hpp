#pragma once

#include <array>
#include <span>
#include <vector>

#include "hawkesflow/model.hpp"

namespace hawkesflow {

// Exponential-decay accumulators for one target side. Per source channel j,
//   slow_j = sum_m e^{b_j v_m} e^{-alpha_j (t - t_m)}
//   fast_j = sum_m e^{b_j v_m} e^{-beta_j  (t - t_m)}
// over past source-j events m, so the excitation at the current time is
// sum_j k_j (slow_j -/+ fast_j). This is what turns the O(N^2) history sum
// into an O(N) recursion.
class DecayState {
 public:
  explicit DecayState(const ModelTheta& theta);

  // Decays the accumulators from the current time to t. Throws
  // time_regression if t moves backwards.
  void decay_to(double t);

  // Decays to e.t, then deposits e^{b_j v} on the channel sourced by e.side.
  void advance(const MarkedEvent& e);

  // Deposit without decaying; requires the state already sits at e.t.
  void add_event(const MarkedEvent& e);

  // Excitation part of the intensity at the current state time.
  double excitation() const;

  // Integral of the excitation over [time(), t1], assuming no events arrive
  // in between. Leaves the state untouched.
  double excitation_integral_to(double t1) const;

  double time() const { return t_; }
  double slow(int channel) const { return slow_[channel]; }
  double fast(int channel) const { return fast_[channel]; }

 private:
  std::array<double, 2> k_;
  std::array<double, 2> b_;
  std::array<double, 2> alpha_;
  std::array<double, 2> beta_;
  std::array<double, 2> slow_{0.0, 0.0};
  std::array<double, 2> fast_{0.0, 0.0};
  double t_ = 0.0;
  double sign_;  // -1 difference form, +1 sum form
};

// lambda_i(t) under the left-continuity convention: events at exactly t are
// excluded. History must be sorted and may contain both sides.
double intensity_at(const ModelTheta& theta,
                    std::span<const MarkedEvent> history, double t);

// lambda_i at every event time of the merged stream, O(N) total. Events
// sharing a timestamp all see only strictly earlier events.
std::vector<double> intensities_at_events(const ModelTheta& theta,
                                          std::span<const MarkedEvent> events);

// Integral of lambda_i over [t0, t1] in closed form.
double compensator(const ModelTheta& theta,
                   std::span<const MarkedEvent> events, double t0, double t1);

}  // namespace hawkesflow

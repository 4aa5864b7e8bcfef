#pragma once

#include <cstdint>
#include <vector>

#include "hawkesflow/model.hpp"
#include "hawkesflow/rng.hpp"
#include "hawkesflow/stationarity.hpp"

namespace hawkesflow {

// Marks are i.i.d. covariates; the model conditions on them, so simulation
// has to supply them.
class MarkDistribution {
 public:
  static MarkDistribution constant(double lots);
  static MarkDistribution log_normal(double mu, double sigma);
  static MarkDistribution empirical(std::vector<double> lots);

  double draw(Rng& rng) const;
  double median() const;

  enum class Kind { Constant, LogNormal, Empirical };
  Kind kind() const { return kind_; }
  double param_a() const { return a_; }  // lots / mu
  double param_b() const { return b_; }  // sigma
  const std::vector<double>& values() const { return values_; }

 private:
  MarkDistribution(Kind kind, double a, double b, std::vector<double> values);

  Kind kind_;
  double a_;
  double b_;
  std::vector<double> values_;
};

struct SimConfig {
  BivariateModel model;
  std::array<MarkDistribution, 2> marks;  // by side
  double horizon = 0.0;                   // seconds
  std::uint64_t seed = 0;
  std::size_t max_events = 2'000'000;
  bool allow_nonstationary = false;
};

// Ogata thinning with a piecewise-constant upper envelope refreshed after
// every candidate. For difference-form kernels the envelope drops the fast
// (negative) term, which only raises it. Deterministic given the seed.
// Refuses non-stationary models (at median marks) unless overridden; throws
// cap_exceeded when max_events is hit.
std::vector<MarkedEvent> simulate(const SimConfig& config);

}  // namespace hawkesflow

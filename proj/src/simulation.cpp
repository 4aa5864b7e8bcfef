#include "hawkesflow/simulation.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "hawkesflow/intensity.hpp"

namespace hawkesflow {

MarkDistribution::MarkDistribution(Kind kind, double a, double b,
                                   std::vector<double> values)
    : kind_(kind), a_(a), b_(b), values_(std::move(values)) {}

MarkDistribution MarkDistribution::constant(double lots) {
  if (!(lots >= 0.0)) throw invalid_params("constant mark must be >= 0 lots");
  return MarkDistribution(Kind::Constant, lots, 0.0, {});
}

MarkDistribution MarkDistribution::log_normal(double mu, double sigma) {
  if (!(sigma >= 0.0)) throw invalid_params("lognormal sigma must be >= 0");
  return MarkDistribution(Kind::LogNormal, mu, sigma, {});
}

MarkDistribution MarkDistribution::empirical(std::vector<double> lots) {
  if (lots.empty()) throw invalid_params("empirical mark list must be non-empty");
  for (double v : lots) {
    if (!(v >= 0.0)) throw invalid_params("empirical marks must be >= 0 lots");
  }
  return MarkDistribution(Kind::Empirical, 0.0, 0.0, std::move(lots));
}

double MarkDistribution::draw(Rng& rng) const {
  switch (kind_) {
    case Kind::Constant:
      return a_;
    case Kind::LogNormal:
      return rng.log_normal(a_, b_);
    case Kind::Empirical:
      return values_[static_cast<std::size_t>(rng.uniform01() *
                                              static_cast<double>(values_.size()))];
  }
  return 0.0;
}

double MarkDistribution::median() const {
  switch (kind_) {
    case Kind::Constant:
      return a_;
    case Kind::LogNormal:
      return std::exp(a_);
    case Kind::Empirical: {
      std::vector<double> sorted = values_;
      std::sort(sorted.begin(), sorted.end());
      const std::size_t n = sorted.size();
      return (n % 2 == 1) ? sorted[n / 2]
                          : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    }
  }
  return 0.0;
}

namespace {

// Upper bound on one side's excitation from the current state onward:
// slow accumulators only decay between events, and for the difference form
// dropping the subtracted fast term only raises the value.
double excitation_envelope(const DecayState& state, const ModelTheta& theta) {
  double bound = 0.0;
  const bool difference =
      theta.kernels[0].form() == KernelForm::DifferenceOfExponentials;
  for (int j = 0; j < 2; ++j) {
    const double k = theta.kernels[j].k();
    bound += difference ? k * state.slow(j)
                        : k * (state.slow(j) + state.fast(j));
  }
  return bound;
}

double max_knot_value(const BaselineSpline& spline) {
  double m = 0.0;
  for (double v : spline.values()) m = std::max(m, v);
  return m;
}

}  // namespace

std::vector<MarkedEvent> simulate(const SimConfig& config) {
  if (!(config.horizon > 0.0)) {
    throw invalid_params("simulation horizon must be > 0");
  }
  if (config.horizon > config.model.buy.baseline.window().length() ||
      config.horizon > config.model.sell.baseline.window().length()) {
    throw invalid_params("simulation horizon exceeds the session window");
  }

  const std::array<double, 2> guard_marks{config.marks[0].median(),
                                          config.marks[1].median()};
  const StationarityReport report = certify(config.model, guard_marks);
  if (!report.stationary && !config.allow_nonstationary) {
    throw nonstationary_model(
        "refusing to simulate: spectral radius " +
        std::to_string(report.spectral_radius) +
        " >= 1 at median marks (set allow_nonstationary to override)");
  }

  Rng rng(config.seed);
  DecayState state_buy(config.model.buy);
  DecayState state_sell(config.model.sell);
  const double mu_bound = max_knot_value(config.model.buy.baseline) +
                          max_knot_value(config.model.sell.baseline);

  std::vector<MarkedEvent> events;
  double t = 0.0;
  while (true) {
    const double bound = mu_bound + excitation_envelope(state_buy, config.model.buy) +
                         excitation_envelope(state_sell, config.model.sell);
    t += rng.exponential(bound);
    if (t >= config.horizon) break;

    state_buy.decay_to(t);
    state_sell.decay_to(t);
    const double lambda_buy =
        config.model.buy.baseline.eval(t) + state_buy.excitation();
    const double lambda_sell =
        config.model.sell.baseline.eval(t) + state_sell.excitation();
    assert(lambda_buy + lambda_sell <= bound * (1.0 + 1e-12) + 1e-12);

    const double u = rng.uniform01() * bound;
    Side side;
    if (u < lambda_buy) {
      side = Side::Buy;
    } else if (u < lambda_buy + lambda_sell) {
      side = Side::Sell;
    } else {
      continue;  // rejected candidate; envelope refreshed on the next loop
    }

    const MarkedEvent event{t, side, config.marks[side_index(side)].draw(rng)};
    events.push_back(event);
    state_buy.add_event(event);
    state_sell.add_event(event);
    if (events.size() > config.max_events) {
      throw cap_exceeded("simulation exceeded " +
                         std::to_string(config.max_events) +
                         " events; parameters look near-critical");
    }
  }
  return events;
}

}  // namespace hawkesflow

#include "hawkesflow/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hawkesflow/intensity.hpp"

namespace hawkesflow {

ResidualSeries residuals(const ModelTheta& theta,
                         std::span<const MarkedEvent> events_all, Side side) {
  require_sorted(events_all);
  if (count_side(events_all, side) < 2) {
    throw insufficient_events("residuals need >= 2 target-side events");
  }

  ResidualSeries series;
  series.side = side;
  DecayState state(theta);
  double accumulated = 0.0;
  double prev_t = 0.0;
  double prev_target_t = -1.0;

  for (const auto& e : events_all) {
    accumulated += theta.baseline.integral(prev_t, e.t) +
                   state.excitation_integral_to(e.t);
    state.decay_to(e.t);
    prev_t = e.t;
    if (e.side == side) {
      if (e.t == prev_target_t) {
        throw invalid_params(
            "duplicate target event times; break ties at ingestion first");
      }
      prev_target_t = e.t;
      series.taus.push_back(accumulated);
      accumulated = 0.0;
    }
    state.add_event(e);
  }
  return series;
}

double kolmogorov_p_value(double x) {
  if (!(x > 0.0)) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k < 100000; ++k) {
    const double term = std::exp(-2.0 * x * x * static_cast<double>(k) *
                                 static_cast<double>(k));
    sum += sign * term;
    sign = -sign;
    if (term < 1e-12) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsReport exponential_ks(std::span<const double> sample, double rate) {
  if (sample.size() < 10) {
    throw too_few_samples("KS test needs n >= 10, got " +
                          std::to_string(sample.size()));
  }
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());

  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double cdf = -std::expm1(-rate * sorted[i]);
    const double lo = cdf - static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n - cdf;
    d = std::max({d, lo, hi});
  }

  KsReport report;
  report.statistic = d;
  report.n = sorted.size();
  report.p_value = kolmogorov_p_value(std::sqrt(n) * d);
  report.pass_at_5pct = report.p_value >= 0.05;
  report.approximate = sorted.size() < 35;
  return report;
}

KsReport ks_test(const ResidualSeries& series) {
  return exponential_ks(series.taus, 1.0);
}

std::vector<std::pair<double, double>> qq_points(const ResidualSeries& series) {
  if (series.n() < 2) {
    throw too_few_samples("QQ plot needs n >= 2");
  }
  std::vector<double> sorted = series.taus;
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  std::vector<std::pair<double, double>> points;
  points.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double p = (static_cast<double>(i) + 0.5) / n;
    points.emplace_back(-std::log(1.0 - p), sorted[i]);
  }
  return points;
}

}  // namespace hawkesflow

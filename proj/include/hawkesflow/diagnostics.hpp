#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hawkesflow/model.hpp"

namespace hawkesflow {

// Time-deformed durations tau_n between consecutive target-side events,
// integrating the fitted intensity over the full two-sided history. Under a
// correct model these are i.i.d. unit exponential.
struct ResidualSeries {
  Side side = Side::Buy;
  std::vector<double> taus;

  std::size_t n() const { return taus.size(); }
};

struct KsReport {
  double statistic = 0.0;  // sup |F_emp - F|
  double p_value = 1.0;
  std::size_t n = 0;
  bool pass_at_5pct = true;
  bool approximate = false;  // asymptotic p-value with n < 35
};

// The first duration runs from the session open to the first target event.
// Requires >= 2 target-side events.
ResidualSeries residuals(const ModelTheta& theta,
                         std::span<const MarkedEvent> events_all, Side side);

// One-sample KS test against the unit exponential CDF 1 - e^{-x}.
KsReport ks_test(const ResidualSeries& series);

// Same test for any sample claimed to be exponential with the given rate.
KsReport exponential_ks(std::span<const double> sample, double rate = 1.0);

// Complementary asymptotic Kolmogorov distribution: P(K > x) evaluated at
// x = sqrt(n) * D_n, series truncated at 1e-12 term size.
double kolmogorov_p_value(double x);

// (theoretical quantile, empirical quantile) pairs against Exp(1), using
// plotting positions (i - 0.5) / n. Requires n >= 2.
std::vector<std::pair<double, double>> qq_points(const ResidualSeries& series);

}  // namespace hawkesflow

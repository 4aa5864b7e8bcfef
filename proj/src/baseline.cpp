#include "hawkesflow/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hawkesflow {

namespace {

constexpr double kSecondsPerMinute = 60.0;

double hhmm(int hours, int minutes) {
  return (hours * 60.0 + minutes) * kSecondsPerMinute;
}

}  // namespace

SessionWindow::SessionWindow(double open_tod, std::vector<double> knots_rel)
    : open_tod_(open_tod), knots_(std::move(knots_rel)) {}

SessionWindow SessionWindow::from_time_of_day(
    const std::vector<double>& knot_times) {
  if (knot_times.size() < 2) {
    throw invalid_params("a session needs at least two knots (open and close)");
  }
  for (std::size_t i = 1; i < knot_times.size(); ++i) {
    if (!(knot_times[i] > knot_times[i - 1])) {
      throw invalid_params("knot times must be strictly increasing");
    }
  }
  const double open = knot_times.front();
  std::vector<double> rel(knot_times.size());
  for (std::size_t i = 0; i < knot_times.size(); ++i) {
    rel[i] = knot_times[i] - open;
  }
  return SessionWindow(open, std::move(rel));
}

SessionWindow SessionWindow::morning() {
  return from_time_of_day({hhmm(9, 30), hhmm(10, 0), hhmm(10, 30), hhmm(11, 30)});
}

SessionWindow SessionWindow::afternoon() {
  return from_time_of_day({hhmm(13, 0), hhmm(14, 0), hhmm(14, 30), hhmm(15, 0)});
}

BaselineSpline::BaselineSpline(SessionWindow window,
                               std::vector<double> knot_values)
    : window_(std::move(window)), values_(std::move(knot_values)) {
  if (values_.size() != window_.knots().size()) {
    throw invalid_params("knot value count must match the knot schedule");
  }
  for (double v : values_) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw invalid_params("knot values must be finite and >= 0");
    }
  }
}

std::size_t BaselineSpline::segment_index(double t) const {
  const auto& ts = window_.knots();
  // Index of the segment [ts[i], ts[i+1]] containing t.
  auto it = std::upper_bound(ts.begin(), ts.end(), t);
  std::size_t i = static_cast<std::size_t>(it - ts.begin());
  if (i == 0) return 0;
  if (i >= ts.size()) return ts.size() - 2;
  return i - 1;
}

double BaselineSpline::eval(double t) const {
  if (t < 0.0 || t > window_.length()) {
    throw out_of_session("baseline evaluated outside the session window: t=" +
                         std::to_string(t));
  }
  const auto& ts = window_.knots();
  const std::size_t i = segment_index(t);
  const double w = (t - ts[i]) / (ts[i + 1] - ts[i]);
  return values_[i] + w * (values_[i + 1] - values_[i]);
}

double BaselineSpline::integral(double t0, double t1) const {
  if (t1 < t0) {
    throw reversed_interval("baseline integral over a reversed interval");
  }
  if (t0 < 0.0 || t1 > window_.length()) {
    throw out_of_session("baseline integral outside the session window");
  }
  const auto& ts = window_.knots();
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const double lo = std::max(t0, ts[i]);
    const double hi = std::min(t1, ts[i + 1]);
    if (hi <= lo) continue;
    const double span = ts[i + 1] - ts[i];
    const double vlo = values_[i] + (lo - ts[i]) / span * (values_[i + 1] - values_[i]);
    const double vhi = values_[i] + (hi - ts[i]) / span * (values_[i + 1] - values_[i]);
    total += 0.5 * (vlo + vhi) * (hi - lo);
  }
  return total;
}

}  // namespace hawkesflow

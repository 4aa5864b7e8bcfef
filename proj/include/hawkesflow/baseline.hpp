#pragma once

#include <vector>

#include "hawkesflow/errors.hpp"

namespace hawkesflow {

// One continuous-auction window with its spline knot schedule. Knot times
// are stored relative to the session open; wall-clock seconds of day only
// appear at ingestion and report boundaries.
class SessionWindow {
 public:
  // knot_times are wall-clock seconds of day, strictly increasing,
  // first = open, last = close.
  static SessionWindow from_time_of_day(const std::vector<double>& knot_times);

  // 9:30-11:30 with knots at 9:30, 10:00, 10:30, 11:30.
  static SessionWindow morning();
  // 13:00-15:00 with knots at 13:00, 14:00, 14:30, 15:00.
  static SessionWindow afternoon();

  double open_tod() const { return open_tod_; }
  double close_tod() const { return open_tod_ + knots_.back(); }
  double length() const { return knots_.back(); }

  // Seconds since open; front() == 0, back() == length().
  const std::vector<double>& knots() const { return knots_; }

 private:
  SessionWindow(double open_tod, std::vector<double> knots_rel);

  double open_tod_;
  std::vector<double> knots_;
};

// Exogenous intensity mu(t) as a piecewise linear spline over one session.
// Immutable after construction; evaluation and exact integration only.
class BaselineSpline {
 public:
  BaselineSpline(SessionWindow window, std::vector<double> knot_values);

  const SessionWindow& window() const { return window_; }
  const std::vector<double>& values() const { return values_; }

  // t in seconds since session open.
  double eval(double t) const;

  // Exact trapezoid integral over [t0, t1], both in seconds since open.
  double integral(double t0, double t1) const;

 private:
  std::size_t segment_index(double t) const;

  SessionWindow window_;
  std::vector<double> values_;
};

}  // namespace hawkesflow

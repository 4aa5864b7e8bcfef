#include "hawkesflow/stationarity.hpp"

#include <cmath>

namespace hawkesflow {

QMatrix build_q(const BivariateModel& model,
                std::array<double, 2> reference_marks) {
  if (model.buy.kernels[0].form() != model.sell.kernels[0].form()) {
    throw mixed_forms("Q matrix requires both thetas to share the kernel form");
  }
  QMatrix q;
  q.reference_marks = reference_marks;
  const ModelTheta* thetas[2] = {&model.buy, &model.sell};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      q.entries[i][j] = thetas[i]->kernels[j].l1_mass(reference_marks[j]);
    }
  }
  return q;
}

double spectral_radius_2x2(double q11, double q12, double q21, double q22) {
  // Roots of x^2 - tr x + det; complex pair has modulus sqrt(det).
  const double tr = q11 + q22;
  const double det = q11 * q22 - q12 * q21;
  const double disc = tr * tr - 4.0 * det;
  if (disc >= 0.0) {
    const double s = std::sqrt(disc);
    return std::max(std::abs(0.5 * (tr + s)), std::abs(0.5 * (tr - s)));
  }
  return std::sqrt(det);
}

double spectral_radius(const QMatrix& q) {
  return spectral_radius_2x2(q.entries[0][0], q.entries[0][1], q.entries[1][0],
                             q.entries[1][1]);
}

StationarityReport certify(const BivariateModel& model,
                           std::array<double, 2> reference_marks) {
  StationarityReport report;
  report.q = build_q(model, reference_marks);
  report.spectral_radius = spectral_radius(report.q);
  report.stationary = report.spectral_radius < 1.0;
  return report;
}

}  // namespace hawkesflow

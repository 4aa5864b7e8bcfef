#pragma once

#include <array>

#include "hawkesflow/model.hpp"

namespace hawkesflow {

// Kernel-mass matrix with entries q_ij = integral of |phi_ij| over [0, inf),
// evaluated at fixed reference marks (v_1, v_2) in lots.
struct QMatrix {
  std::array<std::array<double, 2>, 2> entries{};
  std::array<double, 2> reference_marks{0.0, 0.0};
};

struct StationarityReport {
  QMatrix q;
  double spectral_radius = 0.0;
  bool stationary = false;  // spectral_radius < 1
};

// q_ij = l1 mass of the (i, j) channel at mark v_j. Both thetas must share
// the kernel form.
QMatrix build_q(const BivariateModel& model,
                std::array<double, 2> reference_marks);

// Largest eigenvalue modulus of a 2x2 matrix, complex pairs included.
double spectral_radius(const QMatrix& q);
double spectral_radius_2x2(double q11, double q12, double q21, double q22);

StationarityReport certify(const BivariateModel& model,
                           std::array<double, 2> reference_marks);

}  // namespace hawkesflow

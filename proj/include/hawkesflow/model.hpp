#pragma once

#include <array>

#include "hawkesflow/baseline.hpp"
#include "hawkesflow/events.hpp"
#include "hawkesflow/kernels.hpp"

namespace hawkesflow {

// The parameter set theta_i driving one side's intensity: a baseline spline
// plus one excitation channel per source side. With the default 4-knot
// schedule this is 12 scalar degrees of freedom.
struct ModelTheta {
  Side target;
  std::array<KernelParams, 2> kernels;  // indexed by source side (buy, sell)
  BaselineSpline baseline;

  const KernelParams& channel(Side source) const {
    return kernels[side_index(source)];
  }
};

// A full bivariate model is the pair (theta_buy, theta_sell).
struct BivariateModel {
  ModelTheta buy;
  ModelTheta sell;

  const ModelTheta& theta(Side s) const {
    return s == Side::Buy ? buy : sell;
  }
};

}  // namespace hawkesflow

#include "hawkesflow/kernels.hpp"

#include <cmath>

namespace hawkesflow {

const char* to_string(KernelForm form) {
  return form == KernelForm::DifferenceOfExponentials ? "difference" : "sum";
}

KernelForm kernel_form_from_string(const std::string& name) {
  if (name == "difference" || name == "diff") {
    return KernelForm::DifferenceOfExponentials;
  }
  if (name == "sum") {
    return KernelForm::SumOfExponentials;
  }
  throw invalid_params("unknown kernel form: " + name);
}

KernelParams::KernelParams(double k, double b, double alpha, double beta,
                           KernelForm form)
    : k_(k), b_(b), alpha_(alpha), beta_(beta), form_(form) {
  // k = 0 is allowed so a channel can be switched off (Poisson limits).
  if (!(k >= 0.0) || !std::isfinite(k)) {
    throw invalid_params("kernel amplitude k must be finite and >= 0");
  }
  if (!std::isfinite(b)) {
    throw invalid_params("mark sensitivity b must be finite");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw invalid_params("decay rate alpha must be finite and > 0");
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw invalid_params("decay rate beta must be finite and > 0");
  }
  if (form == KernelForm::DifferenceOfExponentials && !(beta > alpha)) {
    throw invalid_params(
        "difference form requires beta > alpha (kernel would be non-positive)");
  }
}

double KernelParams::eval(double u, double v) const {
  if (form_ == KernelForm::SumOfExponentials && u == 0.0) {
    return 0.0;
  }
  const double mark = std::exp(b_ * v);
  const double slow = std::exp(-alpha_ * u);
  const double fast = std::exp(-beta_ * u);
  return form_ == KernelForm::DifferenceOfExponentials
             ? k_ * mark * (slow - fast)
             : k_ * mark * (slow + fast);
}

double KernelParams::l1_mass(double v) const {
  const double mark = std::exp(b_ * v);
  return form_ == KernelForm::DifferenceOfExponentials
             ? k_ * mark * (1.0 / alpha_ - 1.0 / beta_)
             : k_ * mark * (1.0 / alpha_ + 1.0 / beta_);
}

double KernelParams::peak_time() const {
  if (form_ != KernelForm::DifferenceOfExponentials) {
    throw wrong_form("peak_time is defined for the difference form only");
  }
  return std::log(beta_ / alpha_) / (beta_ - alpha_);
}

}  // namespace hawkesflow

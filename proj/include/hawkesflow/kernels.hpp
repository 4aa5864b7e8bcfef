#pragma once

#include <string>

#include "hawkesflow/errors.hpp"

namespace hawkesflow {

enum class KernelForm {
  DifferenceOfExponentials,  // k e^{bv} (e^{-alpha u} - e^{-beta u})
  SumOfExponentials,         // k e^{bv} (e^{-alpha u} + e^{-beta u}), 0 at u = 0
};

const char* to_string(KernelForm form);
KernelForm kernel_form_from_string(const std::string& name);

// One (target, source) excitation channel. Marks v are order volumes in
// lots (1 lot = 100 shares). Validity is enforced here, once, so that
// eval() can sit in hot loops unchecked.
class KernelParams {
 public:
  KernelParams(double k, double b, double alpha, double beta, KernelForm form);

  double k() const { return k_; }
  double b() const { return b_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  KernelForm form() const { return form_; }

  // phi(u) with mark v, in events per second. Both forms are zero at u = 0:
  // the difference form by construction, the sum form as a defined point
  // exception.
  double eval(double u, double v) const;

  // Integral of |phi| over [0, inf) at mark v:
  // k e^{bv} (1/alpha -/+ 1/beta).
  double l1_mass(double v) const;

  // Unique maximizer ln(beta/alpha)/(beta - alpha) of the difference form.
  // Throws wrong_form for the sum form, which has no interior peak.
  double peak_time() const;

 private:
  double k_;
  double b_;
  double alpha_;
  double beta_;
  KernelForm form_;
};

}  // namespace hawkesflow

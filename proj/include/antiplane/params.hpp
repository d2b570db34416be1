#pragma once

#include <string>
#include <vector>

#include "antiplane/common.hpp"

namespace antiplane {

// Stress tau_2 is fixed to zero: only the decoupled problem is solved.
inline constexpr double kTau2Hat = 0.0;

struct ModelParams {
  double kappa = 0.3;         // mu_1 / mu_0
  double tau1_hat = -1.0;     // tau_1 / mu_0
  double tau1_inf_hat = -2.0; // tau_1^inf / mu_0
  double m = 4.0;
  double N0_star = 0.0;
  double N1 = 1.0;
  double b0 = 0.0;
  double xi0 = -1.0;
  cplx zeta0{0.5, 0.75};
  int quad_order = 64;
  int n_points = 400;
  double tol = 1e-6;
};

struct Violation {
  std::string field;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate(const ModelParams& p);

struct DerivedConstants {
  double lambda = 0.0;
  double k = 0.0;
  double K = 0.0;
  double Kp = 0.0;
  double b1 = 0.0;
  cplx A;                // period over the a-cycle, -4ikK
  double B = 0.0;        // period over the b-cycle, 4kK'
  cplx infinity_ratio;   // lambda (tau1_inf - tau1) / (i tau1)
};

// Throws ValidationError when validate() fails.
DerivedConstants derive(const ModelParams& p);

}  // namespace antiplane

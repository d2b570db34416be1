#include "antiplane/params.hpp"

#include <cmath>

#include "antiplane/elliptic.hpp"

namespace antiplane {

std::string ValidationReport::summary() const {
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += v.field + ": " + v.message;
  }
  return s;
}

ValidationReport validate(const ModelParams& p) {
  ValidationReport r;
  auto add = [&](const char* field, const char* msg) { r.violations.push_back({field, msg}); };
  auto finite = [](double x) { return std::isfinite(x); };
  if (!finite(p.kappa) || !finite(p.tau1_hat) || !finite(p.tau1_inf_hat) || !finite(p.m) ||
      !finite(p.N0_star) || !finite(p.N1) || !finite(p.b0) || !finite(p.xi0) ||
      !finite(p.zeta0.real()) || !finite(p.zeta0.imag()) || !finite(p.tol))
    add("params", "non-finite value");
  if (p.kappa == 1.0) add("kappa", "kappa singular (kappa = 1 makes lambda undefined)");
  else if (!(p.kappa > 0.0)) add("kappa", "kappa must be positive");
  if (p.tau1_hat == p.tau1_inf_hat)
    add("tau1_hat", "no solution exists for tau1 = tau1_inf");
  if (p.tau1_hat == 0.0) add("tau1_hat", "tau1 must be nonzero");
  if (!(p.m > 1.0)) add("m", "m must exceed 1");
  if (p.N1 == 0.0) add("N1", "N1 must be nonzero");
  if (!(p.xi0 < 0.0)) add("xi0", "xi0 must be negative (kernel pole would sit on a slit)");
  if (p.zeta0.imag() == 0.0) add("zeta0", "zeta0 must be off the real axis");
  if (p.quad_order < 8) add("quad_order", "quad_order must be at least 8");
  if (p.n_points < 16) add("n_points", "n_points must be at least 16");
  if (!(p.tol > 0.0)) add("tol", "tol must be positive");
  return r;
}

DerivedConstants derive(const ModelParams& p) {
  const ValidationReport rep = validate(p);
  if (!rep.ok()) throw ValidationError(rep.summary());
  DerivedConstants d;
  d.lambda = p.kappa / (1.0 - p.kappa);
  d.k = 1.0 / std::sqrt(p.m);
  d.K = complete_elliptic_k(d.k);
  d.Kp = complete_elliptic_k(std::sqrt(1.0 - 1.0 / p.m));
  d.b1 = p.b0 - kPi * p.N1 / (d.k * d.K);
  d.A = cplx(0.0, -4.0 * d.k * d.K);
  d.B = 4.0 * d.k * d.Kp;
  d.infinity_ratio = d.lambda * (p.tau1_inf_hat - p.tau1_hat) / (kI * p.tau1_hat);
  return d;
}

}  // namespace antiplane

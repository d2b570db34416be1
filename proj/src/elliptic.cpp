#include "antiplane/elliptic.hpp"

#include <array>
#include <cmath>

namespace antiplane {

double complete_elliptic_k(double k) {
  if (!(k >= 0.0 && k < 1.0)) throw SolverError("complete_elliptic_k: modulus outside [0, 1)");
  double a = 1.0;
  double b = std::sqrt((1.0 - k) * (1.0 + k));
  for (int it = 0; it < 64; ++it) {
    if (std::abs(a - b) <= 4e-16 * a) return kPi / (2.0 * a);
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  throw SolverError("complete_elliptic_k: AGM did not converge");
}

JacobiTriple jacobi_sncndn(double u, double k) {
  const double m = k * k;
  if (m < 1e-300) return {std::sin(u), std::cos(u), 1.0};
  if (m >= 1.0) {
    const double s = 1.0 / std::cosh(u);
    return {std::tanh(u), s, s};
  }
  // Descending Landen sequence, then backward recurrence on the amplitude.
  std::array<double, 32> a{}, c{};
  a[0] = 1.0;
  c[0] = std::sqrt(m);
  double b = std::sqrt(1.0 - m);
  int n = 0;
  while (std::abs(c[n]) > 1e-16 * a[n]) {
    if (n + 1 >= static_cast<int>(a.size())) throw SolverError("jacobi_sncndn: no convergence");
    a[n + 1] = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
  }
  double phi = std::ldexp(a[n] * u, n);
  for (int j = n; j >= 1; --j) phi = 0.5 * (phi + std::asin(c[j] * std::sin(phi) / a[j]));
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  return {sn, cn, std::sqrt(1.0 - m * sn * sn)};
}

cplx jacobi_sn(cplx w, double k) {
  const double kp = std::sqrt((1.0 - k) * (1.0 + k));
  const JacobiTriple r = jacobi_sncndn(w.real(), k);
  const JacobiTriple q = jacobi_sncndn(w.imag(), kp);
  const double den = q.cn * q.cn + k * k * r.sn * r.sn * q.sn * q.sn;
  if (den == 0.0) throw PoleError("jacobi_sn: pole");
  return cplx(r.sn * q.dn, r.cn * r.dn * q.sn * q.cn) / den;
}

}  // namespace antiplane

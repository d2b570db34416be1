#include "antiplane/surface.hpp"

#include <cmath>
#include <stdexcept>

namespace antiplane {

cplx sqrt_p(cplx zeta, double m) {
  if (zeta == cplx(0.0) || zeta == cplx(1.0) || zeta == cplx(m)) return 0.0;
  // sqrt(1 - 1/zeta) is cut along (0, 1], sqrt(m - zeta) along [m, inf).
  return -zeta * std::sqrt(1.0 - 1.0 / zeta) * std::sqrt(m - zeta);
}

double abs_sqrt_p(double xi, double m) {
  return std::sqrt(std::abs(xi * (1.0 - xi) * (xi - m)));
}

cplx u_at(const SurfacePoint& pt, double m) { return sheet_sign(pt.sheet) * sqrt_p(pt.zeta, m); }

void check_side_value(const SideValue& s, double m) {
  if (s.slit == Slit::l1 && !(s.xi >= 0.0 && s.xi <= 1.0))
    throw std::invalid_argument("side value on l1 requires 0 <= xi <= 1");
  if (s.slit == Slit::l0 && !(s.xi >= m))
    throw std::invalid_argument("side value on l0 requires xi >= m");
}

cplx side_u(const SideValue& s, double m) {
  check_side_value(s, m);
  const double r = abs_sqrt_p(s.xi, m);
  const double sign = s.slit == Slit::l1 ? -side_sign(s.side) : side_sign(s.side);
  return cplx(0.0, sign * r);
}

SurfacePoint symmetric(const SurfacePoint& pt) { return {std::conj(pt.zeta), flip(pt.sheet)}; }

cplx kernel_dV(cplx zeta, cplx u, cplx xi, cplx v, double xi0) {
  if (zeta == cplx(xi0)) throw PoleError("kernel_dV: target at xi0");
  return 0.5 * ((zeta - xi0) / (xi - xi0) + (u / v) * (xi - xi0) / (zeta - xi0)) / (xi - zeta);
}

cplx kernel_dV(const SurfacePoint& target, const SideValue& source, double xi0, double m) {
  return kernel_dV(target.zeta, u_at(target, m), source.xi, side_u(source, m), xi0);
}

cplx kernel_dV_genus_n(cplx zeta, cplx u, cplx xi, cplx v, std::span<const double> xi_list) {
  if (xi_list.empty()) throw std::invalid_argument("kernel_dV_genus_n: empty xi_list");
  cplx prod = 1.0;
  for (double xj : xi_list) {
    if (zeta == cplx(xj)) throw PoleError("kernel_dV_genus_n: target at xi_j");
    prod *= (xi - xj) / (zeta - xj);
  }
  return 0.5 * (1.0 + (u / v) * prod) * (1.0 / (xi - zeta) - 1.0 / (xi - xi_list[0]));
}

cplx hyperelliptic_p(cplx zeta, double m, std::span<const double> branch_points) {
  cplx r = zeta - m;
  for (double k : branch_points) r *= zeta - k;
  return r;
}

}  // namespace antiplane

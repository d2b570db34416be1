#include "antiplane/rh1.hpp"

#include <cmath>

namespace antiplane {

L0Transform::L0Transform(double m, double xi0, int order) : m_(m), xi0_(xi0), order_(order) {
  h_ = cheb1_coeffs([&](double tau) { return (1.0 - tau * xi0) / std::sqrt(1.0 - tau); }, order,
                    0.0, 1.0 / m);
}

cplx L0Transform::operator()(cplx zeta, int side) const {
  if (side == 0 && std::abs(zeta) < 0.5 * m_) {
    return semi_infinite([&](double xi) { return cplx(xi - xi0_) / (xi - zeta); }, m_, order_);
  }
  // zeta = xi +- i0 maps to 1/zeta = 1/xi -+ i0.
  return -cauchy_transform(h_, 1.0 / zeta, -side) / (zeta * std::sqrt(m_));
}

L1Transform::L1Transform(double m, double xi0, int order) {
  h_ = cheb1_coeffs([&](double tau) { return (tau - xi0) / std::sqrt(m - tau); }, order);
}

cplx L1Transform::operator()(cplx zeta, int side) const { return cauchy_transform(h_, zeta, side); }

double L1Transform::principal_value(double xi) const { return pv_cheb1(h_, xi); }

Phi1Solution::Phi1Solution(const ModelParams& p, const DerivedConstants& d)
    : d_(d),
      N0_(p.N0_star),
      N1_(p.N1),
      b0_(p.b0),
      b1_(d.b1),
      xi0_(p.xi0),
      m_(p.m),
      order_(p.quad_order),
      J0_(p.m, p.xi0, 4 * p.quad_order),
      J1_(p.m, p.xi0, 4 * p.quad_order) {}

cplx Phi1Solution::G(cplx zeta, int side0, int side1) const {
  return 2.0 * N1_ - (b0_ / kPi) * J0_(zeta, side0) + (b1_ / kPi) * J1_(zeta, side1);
}

cplx Phi1Solution::phi1(const SurfacePoint& pt) const {
  if (pt.zeta == cplx(xi0_)) throw PoleError("phi1: evaluation exactly at xi0");
  const cplx u = u_at(pt, m_);
  return N0_ + kI * u * G(pt.zeta, 0, 0) / (pt.zeta - xi0_);
}

cplx Phi1Solution::phi1_side(const SideValue& sv) const {
  const cplx u = side_u(sv, m_);
  const int s = static_cast<int>(side_sign(sv.side));
  const cplx g = sv.slit == Slit::l1 ? G(sv.xi, 0, s) : G(sv.xi, s, 0);
  return N0_ + kI * u * g / (sv.xi - xi0_);
}

double Phi1Solution::g0(double xi) const {
  return 2.0 * N1_ - (b0_ / kPi) * J0_(xi).real() + (b1_ / kPi) * J1_.principal_value(xi);
}

double Phi1Solution::re_phi1_plus_l1(double xi, Side side) const {
  return N0_ + side_sign(side) * abs_sqrt_p(xi, m_) * g0(xi) / (xi - xi0_);
}

cplx Phi1Solution::loop_integral(Slit slit) const {
  if (slit == Slit::l0)
    return cplx(0.0, -2.0) * semi_infinite([](double) { return 1.0; }, m_, 4 * order_);
  const double half = gauss_chebyshev1([&](double t) { return 1.0 / std::sqrt(m_ - t); }, 4 * order_);
  return cplx(0.0, 2.0 * half);
}

double Phi1Solution::removability_defect() const {
  const cplx r = cplx(0.0, 2.0 * N1_) + (b0_ / (2.0 * kPi)) * loop_integral(Slit::l0) +
                 (b1_ / (2.0 * kPi)) * loop_integral(Slit::l1);
  return std::abs(r);
}

}  // namespace antiplane

#pragma once

#include "antiplane/params.hpp"
#include "antiplane/quadrature.hpp"
#include "antiplane/surface.hpp"

namespace antiplane {

// J0(zeta) = int_m^inf (xi - xi0) dxi / (sqrt|p(xi)| (xi - zeta)).
// After xi = 1/tau this is a first-kind Cauchy integral over [0, 1/m].
class L0Transform {
 public:
  L0Transform() = default;
  L0Transform(double m, double xi0, int order);

  // side = +1 / -1 for zeta = xi +- i0 on l0.
  cplx operator()(cplx zeta, int side = 0) const;

 private:
  double m_ = 0.0;
  double xi0_ = 0.0;
  int order_ = 0;
  ChebSeries<double> h_;
};

// J1(zeta) = int_0^1 (xi - xi0) dxi / (sqrt|p(xi)| (xi - zeta)).
class L1Transform {
 public:
  L1Transform() = default;
  L1Transform(double m, double xi0, int order);

  cplx operator()(cplx zeta, int side = 0) const;
  double principal_value(double xi) const;

 private:
  ChebSeries<double> h_;
};

class Phi1Solution {
 public:
  Phi1Solution() = default;
  Phi1Solution(const ModelParams& p, const DerivedConstants& d);

  cplx phi1(const SurfacePoint& pt) const;
  // Upper-sheet boundary value on a slit side.
  cplx phi1_side(const SideValue& sv) const;
  double re_phi1_plus_l1(double xi, Side side) const;
  double g0(double xi) const;

  // int_{l_j} dxi / v over the two-sided slit.
  cplx loop_integral(Slit slit) const;
  // Modulus of 2iN1 + (b0/2pi) int_{l0} dxi/v + (b1/2pi) int_{l1} dxi/v.
  double removability_defect() const;

  double N0() const { return N0_; }
  double N1() const { return N1_; }
  double b0() const { return b0_; }
  double b1() const { return b1_; }
  double xi0() const { return xi0_; }
  double m() const { return m_; }
  const DerivedConstants& derived() const { return d_; }
  const L0Transform& l0() const { return J0_; }
  const L1Transform& l1() const { return J1_; }

 private:
  cplx G(cplx zeta, int side0, int side1) const;

  DerivedConstants d_;
  double N0_ = 0.0, N1_ = 1.0, b0_ = 0.0, b1_ = 0.0, xi0_ = -1.0, m_ = 4.0;
  int order_ = 64;
  L0Transform J0_;
  L1Transform J1_;
};

}  // namespace antiplane

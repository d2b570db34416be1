#pragma once

#include "antiplane/factorization.hpp"
#include "antiplane/params.hpp"
#include "antiplane/quadrature.hpp"
#include "antiplane/rh1.hpp"

namespace antiplane {

struct OmegaConstants {
  double M0 = 0, M1 = 0, M2 = 0, M3 = 0;
  double P = 0, Q = 0;
  double P0 = 0, Q0 = 0, P1 = 0, Q1 = 0, P2 = 0, Q2 = 0;
};

// Chebyshev expansions of the l1 densities, with
// Y+ = 1/X(xi+) + 1/X(xi-), Yhat = (1/X(xi+) - 1/X(xi-)) / sqrt(tau (1 - tau)).
struct L1Densities {
  ChebSeries<double> F1;   // sqrt(m - tau) g0 Y+ / (tau - xi0)^2, second kind
  ChebSeries<double> F2;   // (tau - xi0) Y+ / sqrt(m - tau), first kind
  ChebSeries<double> F3a;  // Yhat / (tau - xi0), second kind
  ChebSeries<double> F3b;  // g0 Yhat, second kind
  ChebSeries<double> F3a_first;  // tau (1 - tau) Yhat / (tau - xi0), first kind
  ChebSeries<double> F3b_first;  // tau (1 - tau) g0 Yhat, first kind
  ChebSeries<double> Fa;   // N0* F3a + F1
  ChebSeries<double> Fb;   // N0* F2 + tau (1 - tau) g0 Yhat
};

class Phi2Solution {
 public:
  Phi2Solution() = default;
  Phi2Solution(const ModelParams& p, const DerivedConstants& d, Phi1Solution phi1, Factorizer fac);

  cplx g2_side(double xi, Side side) const;
  cplx psi_side(double xi, Side side) const;
  // The third singular integral of the side formula, second- or first-kind scheme.
  double I3(double xi, Side side, ChebKind kind = ChebKind::second) const;
  cplx psi_at(cplx zeta, cplx u, int side = 0) const;
  cplx psi_at(const SurfacePoint& pt) const;
  cplx omega_rational(cplx zeta, cplx u) const;
  cplx omega_rational(const SurfacePoint& pt) const;
  cplx phi2(const SurfacePoint& pt) const;
  // Upper-sheet boundary value on a slit side.
  cplx phi2_side(const SideValue& sv) const;

  const OmegaConstants& constants() const { return c_; }
  const L1Densities& densities() const { return dens_; }
  const Phi1Solution& phi1() const { return phi1_; }
  const Factorizer& factorizer() const { return fac_; }

 private:
  void build_densities(int n);
  void assemble_constants(const ModelParams& p, const DerivedConstants& d);

  Phi1Solution phi1_;
  Factorizer fac_;
  L1Densities dens_;
  OmegaConstants c_;
  double xi0_ = -1, m_ = 4, N0_ = 0;
  cplx zeta0_, u0_, u0bar_;
};

}  // namespace antiplane

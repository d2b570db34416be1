#pragma once

#include <vector>

#include "antiplane/params.hpp"
#include "antiplane/quadrature.hpp"
#include "antiplane/rh1.hpp"
#include "antiplane/surface.hpp"

namespace antiplane {

// int_0^zeta dxi / p^(1/2)(xi) along the straight segment on the upper sheet.
cplx abel_integral(cplx zeta, double m, int n = 20);

struct JacobiSolution {
  cplx h;
  cplx zeta1;
  Sheet sheet1 = Sheet::upper;
  int n_a = 0;
  int n_b = 0;
  double residual = 0.0;     // |int_0^{q1} dxi/u + n_a A + n_b B - h| along gamma
  double snap_distance = 0;  // distance of the accepted (n_a, n_b) from integers
  double other_distance = 0; // same for the rejected assignment
  bool exactly_one = true;   // exactly one assignment is integral within 1e-6
  bool snapped = false;      // accepted with 1e-6 < snap_distance <= 1e-3
};

inline constexpr double kSnapTolerance = 1e-6;
inline constexpr double kSnapHardLimit = 1e-3;

// gamma from zeta0 to zeta1. Upper sheet: straight, or through a waypoint on
// the negative axis left of xi0 when the segment would meet a slit or pass
// near xi0. Lower sheet: zeta0 -> 0 on the upper sheet, 0 -> zeta1 below.
PathSpec gamma_path(const ModelParams& p, cplx zeta1, Sheet sheet1);

JacobiSolution solve_jacobi(const ModelParams& p, const DerivedConstants& d);

class Factorizer {
 public:
  Factorizer() = default;
  Factorizer(const ModelParams& p, const DerivedConstants& d, const L0Transform& J0);

  cplx log_X(cplx zeta, cplx u, int l0_side = 0) const;
  cplx X_at(const SurfacePoint& pt) const;
  // Upper-sheet boundary value on a slit side.
  cplx X_side(const SideValue& sv) const;

  // On l1: X(xi+-) = exp(-A(xi) -+ sqrt|p(xi)| sigma(xi)), both real.
  struct L1Parts {
    double A;
    double sigma;
  };
  L1Parts l1_parts(double xi) const;
  double X_plus_l1(double xi, Side side) const;

  double X_infinity() const { return X_inf_; }
  const JacobiSolution& jacobi() const { return jac_; }
  const PathSpec& path() const { return path_; }
  // int_gamma dxi / v.
  cplx gamma_abel() const;

 private:
  struct Node {
    cplx eta;     // node on gamma or on its conjugate
    cplx w;       // surface function at the node
    cplx weight;  // d eta
  };
  struct Segment {
    cplx a, b;
    double sheet;  // sign of the surface function along the segment
    double panel;
    std::size_t begin, end;
  };

  JacobiSolution jac_;
  PathSpec path_;
  double xi0_ = -1.0, m_ = 4.0, X_inf_ = 1.0;
  cplx zeta0_;
  L0Transform J0_;
  std::vector<Node> nodes_;        // gamma followed by its conjugate
  std::vector<Segment> segments_;  // index ranges into nodes_
  std::size_t n_gamma_ = 0;
};

}  // namespace antiplane

#pragma once

#include <span>

#include "antiplane/common.hpp"

namespace antiplane {

enum class Sheet { upper, lower };
enum class Slit { l0, l1 };
enum class Side { plus, minus };

inline double sheet_sign(Sheet s) { return s == Sheet::upper ? 1.0 : -1.0; }
inline Sheet flip(Sheet s) { return s == Sheet::upper ? Sheet::lower : Sheet::upper; }
inline double side_sign(Side s) { return s == Side::plus ? 1.0 : -1.0; }

struct SurfacePoint {
  cplx zeta;
  Sheet sheet = Sheet::upper;
};

struct SideValue {
  double xi;
  Slit slit;
  Side side;
};

// Fixed branch of sqrt(zeta (1 - zeta) (zeta - m)) on the plane cut along
// [0, 1] and [m, inf), positive on the negative real axis.
cplx sqrt_p(cplx zeta, double m);

// |p(xi)|^(1/2) for real xi.
double abs_sqrt_p(double xi, double m);

cplx u_at(const SurfacePoint& pt, double m);

// Throws std::invalid_argument if xi is not inside the slit.
void check_side_value(const SideValue& s, double m);

// Upper-sheet boundary value of u on a slit side.
cplx side_u(const SideValue& s, double m);

SurfacePoint symmetric(const SurfacePoint& pt);

// dV density in the variable xi for target (zeta, u) and source (xi, v).
cplx kernel_dV(cplx zeta, cplx u, cplx xi, cplx v, double xi0);
cplx kernel_dV(const SurfacePoint& target, const SideValue& source, double xi0, double m);

// Genus-n analogue; xi_list holds xi_0 ... xi_n, u and v are values of the
// hyperelliptic square root supplied by the caller.
cplx kernel_dV_genus_n(cplx zeta, cplx u, cplx xi, cplx v, std::span<const double> xi_list);

// p(zeta) = (zeta - m) prod_j (zeta - k_j) for branch points k_j.
cplx hyperelliptic_p(cplx zeta, double m, std::span<const double> branch_points);

}  // namespace antiplane

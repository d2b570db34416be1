#include "antiplane/factorization.hpp"

#include <algorithm>
#include <cmath>

#include "antiplane/elliptic.hpp"

namespace antiplane {

namespace {

constexpr int kPathOrder = 20;

double panel_length(cplx a, cplx b) {
  const double len = std::abs(b - a);
  return len / std::max(4.0, std::ceil(len / 0.1));
}

// Nodes of one segment of a path, with its own flags.
std::vector<PathNode> segment_nodes(const PathSpec& path, std::size_t s) {
  PathSpec one;
  one.points = {path.points[s], path.points[s + 1]};
  if (!path.flags.empty()) one.flags = {path.flags[s], path.flags[s + 1]};
  one.sheets = {path.sheets.empty() ? Sheet::upper : path.sheets[s]};
  std::vector<PathNode> nodes =
      discretize(one, kPathOrder, panel_length(one.points[0], one.points[1]) * (1.0 + 1e-12));
  for (auto& nd : nodes) nd.segment = s;
  return nodes;
}

double distance_to_segment(cplx z, cplx a, cplx b) {
  const cplx d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(z - a);
  const double t = std::clamp(((z - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(z - (a + t * d));
}

double integer_distance(double x) { return std::abs(x - std::round(x)); }

}  // namespace

cplx abel_integral(cplx zeta, double m, int n) {
  if (zeta == cplx(0.0)) return 0.0;
  PathSpec path;
  path.points = {0.0, zeta};
  const bool end_branch = std::abs(zeta - 1.0) < 1e-3 || std::abs(zeta - m) < 1e-3;
  path.flags = {EndpointKind::inverse_sqrt,
                end_branch ? EndpointKind::inverse_sqrt : EndpointKind::regular};
  return path_integral([&](cplx xi) { return 1.0 / sqrt_p(xi, m); }, path, n, std::abs(zeta) / 8.0);
}

PathSpec gamma_path(const ModelParams& p, cplx zeta1, Sheet sheet1) {
  const cplx z0 = p.zeta0;
  PathSpec path;
  if (sheet1 == Sheet::lower) {
    path.points = {z0, 0.0, zeta1};
    path.flags = {EndpointKind::regular, EndpointKind::inverse_sqrt, EndpointKind::regular};
    path.sheets = {Sheet::upper, Sheet::lower};
    return path;
  }
  bool detour = false;
  if (z0.imag() * zeta1.imag() <= 0.0) {
    const double t = z0.imag() / (z0.imag() - zeta1.imag());
    const double xc = (z0 + (zeta1 - z0) * t).real();
    detour = xc > -0.2 || std::abs(xc - p.xi0) < 0.2;
  }
  if (detour) {
    const cplx waypoint(p.xi0 - 0.5 * (1.0 + std::abs(p.xi0)), 0.0);
    path.points = {z0, waypoint, zeta1};
    path.flags = {EndpointKind::regular, EndpointKind::regular, EndpointKind::regular};
    path.sheets = {Sheet::upper, Sheet::upper};
  } else {
    path.points = {z0, zeta1};
    path.flags = {EndpointKind::regular, EndpointKind::regular};
    path.sheets = {Sheet::upper};
  }
  return path;
}

JacobiSolution solve_jacobi(const ModelParams& p, const DerivedConstants& d) {
  JacobiSolution j;
  const double k = d.k, K = d.K, Kp = d.Kp;
  const cplx abel0 = abel_integral(p.zeta0, p.m);
  j.h = abel0 - kI * (k * K);
  const cplx s = jacobi_sn(kI * j.h / (2.0 * k), k);
  j.zeta1 = s * s;
  if (!std::isfinite(j.zeta1.real()) || !std::isfinite(j.zeta1.imag()))
    throw SolverError("solve_jacobi: sn evaluation failed");

  const cplx abel1 = abel_integral(j.zeta1, p.m);
  const cplx I_minus = j.h - abel1, I_plus = j.h + abel1;
  const double na_m = -I_minus.imag() / (4.0 * k * K), nb_m = I_minus.real() / (4.0 * k * Kp);
  const double na_p = -I_plus.imag() / (4.0 * k * K), nb_p = I_plus.real() / (4.0 * k * Kp);
  const double dist_m = std::max(integer_distance(na_m), integer_distance(nb_m));
  const double dist_p = std::max(integer_distance(na_p), integer_distance(nb_p));
  j.exactly_one = (dist_m <= kSnapTolerance) != (dist_p <= kSnapTolerance);

  bool upper;
  if (dist_m <= kSnapTolerance) upper = true;
  else if (dist_p <= kSnapTolerance) upper = false;
  else if (std::min(dist_m, dist_p) <= kSnapHardLimit) upper = dist_m <= dist_p;
  else
    throw SolverError("solve_jacobi: neither sheet assignment gives integer n_a, n_b (distances " +
                      std::to_string(dist_m) + ", " + std::to_string(dist_p) + ")");
  j.sheet1 = upper ? Sheet::upper : Sheet::lower;
  j.n_a = static_cast<int>(std::lround(upper ? na_m : na_p));
  j.n_b = static_cast<int>(std::lround(upper ? nb_m : nb_p));
  j.snap_distance = upper ? dist_m : dist_p;
  j.other_distance = upper ? dist_p : dist_m;
  j.snapped = j.snap_distance > kSnapTolerance;

  const PathSpec path = gamma_path(p, j.zeta1, j.sheet1);
  cplx along = 0.0;
  for (std::size_t s2 = 0; s2 + 1 < path.points.size(); ++s2)
    for (const PathNode& nd : segment_nodes(path, s2))
      along += nd.weight / (sheet_sign(nd.sheet) * sqrt_p(nd.xi, p.m));
  j.residual = std::abs(abel0 + along + static_cast<double>(j.n_a) * d.A +
                        static_cast<double>(j.n_b) * d.B - j.h);
  return j;
}

Factorizer::Factorizer(const ModelParams& p, const DerivedConstants& d, const L0Transform& J0)
    : jac_(solve_jacobi(p, d)), xi0_(p.xi0), m_(p.m), zeta0_(p.zeta0), J0_(J0) {
  path_ = gamma_path(p, jac_.zeta1, jac_.sheet1);
  X_inf_ = std::abs((jac_.zeta1 - p.xi0) / (p.zeta0 - p.xi0));
  const std::size_t nseg = path_.points.size() - 1;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t s = 0; s < nseg; ++s) {
      Segment seg;
      const cplx a = path_.points[s], b = path_.points[s + 1];
      const double sign = sheet_sign(path_.sheets[s]);
      seg.a = pass == 0 ? a : std::conj(a);
      seg.b = pass == 0 ? b : std::conj(b);
      seg.sheet = pass == 0 ? sign : -sign;
      seg.panel = panel_length(a, b);
      seg.begin = nodes_.size();
      for (const PathNode& nd : segment_nodes(path_, s)) {
        const cplx v = sign * sqrt_p(nd.xi, m_);
        if (pass == 0) nodes_.push_back({nd.xi, v, nd.weight});
        else nodes_.push_back({std::conj(nd.xi), -std::conj(v), std::conj(nd.weight)});
      }
      seg.end = nodes_.size();
      segments_.push_back(seg);
    }
    if (pass == 0) n_gamma_ = nodes_.size();
  }
}

cplx Factorizer::log_X(cplx zeta, cplx u, int l0_side) const {
  if (zeta == cplx(xi0_)) throw PoleError("log_X: evaluation exactly at xi0");
  const cplx dz = zeta - xi0_;
  cplx total = (0.5 - 2.0 * jac_.n_a) * u / (kI * dz) * J0_(zeta, l0_side);
  for (const Segment& seg : segments_) {
    cplx fz = 0.0;
    const bool near = distance_to_segment(zeta, seg.a, seg.b) < 3.0 * seg.panel;
    if (near) {
      const cplx wz = seg.sheet * sqrt_p(zeta, m_);
      if (wz != cplx(0.0)) fz = -0.5 * (1.0 + u / wz);
    }
    cplx acc = 0.0;
    for (std::size_t k = seg.begin; k < seg.end; ++k) {
      const Node& nd = nodes_[k];
      const cplx de = nd.eta - xi0_;
      const cplx f = -0.5 * (dz / de + (u / nd.w) * de / dz);
      acc += nd.weight * (f - fz) / (nd.eta - zeta);
    }
    if (fz != cplx(0.0)) acc += fz * std::log((seg.b - zeta) / (seg.a - zeta));
    total += acc;
  }
  return total;
}

cplx Factorizer::X_at(const SurfacePoint& pt) const {
  const double scale = 1e-13 * (1.0 + std::abs(jac_.zeta1));
  if ((pt.sheet == jac_.sheet1 && std::abs(pt.zeta - jac_.zeta1) < scale) ||
      (pt.sheet != jac_.sheet1 && std::abs(pt.zeta - std::conj(jac_.zeta1)) < scale))
    throw PoleError("X_at: pole at q1 or its symmetric point");
  return std::exp(log_X(pt.zeta, u_at(pt, m_)));
}

cplx Factorizer::X_side(const SideValue& sv) const {
  const int side = sv.slit == Slit::l0 ? static_cast<int>(side_sign(sv.side)) : 0;
  return std::exp(log_X(sv.xi, side_u(sv, m_), side));
}

Factorizer::L1Parts Factorizer::l1_parts(double xi) const {
  if (!(xi > 0.0 && xi < 1.0)) throw std::invalid_argument("l1_parts: xi outside (0, 1)");
  cplx a = 0.0, b = 0.0;
  for (std::size_t k = 0; k < n_gamma_; ++k) {
    const Node& nd = nodes_[k];
    const cplx de = nd.eta - xi0_;
    const cplx dw = nd.weight / (nd.eta - xi);
    a += (xi - xi0_) / de * dw;
    b += de / nd.w * dw;
  }
  const double sigma = ((0.5 - 2.0 * jac_.n_a) * J0_(xi).real() + b.imag()) / (xi - xi0_);
  return {a.real(), sigma};
}

double Factorizer::X_plus_l1(double xi, Side side) const {
  const L1Parts q = l1_parts(xi);
  return std::exp(-q.A - side_sign(side) * abs_sqrt_p(xi, m_) * q.sigma);
}

cplx Factorizer::gamma_abel() const {
  cplx acc = 0.0;
  for (std::size_t k = 0; k < n_gamma_; ++k) acc += nodes_[k].weight / nodes_[k].w;
  return acc;
}

}  // namespace antiplane

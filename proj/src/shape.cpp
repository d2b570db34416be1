#include "antiplane/shape.hpp"

#include <algorithm>
#include <cmath>

namespace antiplane {

namespace {

Phi2Solution build_phi2(const ModelParams& p, const DerivedConstants& d) {
  Phi1Solution phi1(p, d);
  Factorizer fac(p, d, phi1.l0());
  return Phi2Solution(p, d, std::move(phi1), std::move(fac));
}

double orient(double ax, double ay, double bx, double by, double cx, double cy) {
  return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

}  // namespace

Solution::Solution(const ModelParams& p) : p_(p), d_(derive(p)), phi2_(build_phi2(p, d_)) {}

cplx Solution::map_omega(const SideValue& sv) const {
  return -kI * d_.lambda / p_.tau1_hat * phi2_.phi2_side(sv);
}

cplx Solution::map_omega(const SurfacePoint& pt) const {
  return -kI * d_.lambda / p_.tau1_hat * phi2_.phi2(pt);
}

std::vector<double> contour_abscissae(int n) {
  std::vector<double> xi(n);
  for (int j = 1; j <= n; ++j) xi[j - 1] = 0.5 * (1.0 - std::cos(kPi * (j - 0.5) / n));
  return xi;
}

cplx endpoint_limit(const Solution& sol, double endpoint, Side side) {
  constexpr int kSamples = 6;
  constexpr double kStep = 0.01;
  std::array<double, kSamples> s{};
  std::array<cplx, kSamples> v{};
  for (int i = 0; i < kSamples; ++i) {
    s[i] = kStep * (i + 1);
    const double xi = endpoint == 0.0 ? s[i] * s[i] : 1.0 - s[i] * s[i];
    v[i] = sol.map_omega(SideValue{xi, Slit::l1, side});
  }
  // Neville's scheme evaluated at s = 0.
  for (int k = 1; k < kSamples; ++k)
    for (int i = kSamples - 1; i >= k; --i)
      v[i] = (s[i] * v[i - 1] - s[i - k] * v[i]) / (s[i] - s[i - k]);
  return v[kSamples - 1];
}

double polygon_area(const std::vector<ContourPoint>& pts) {
  double a = 0.0;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const ContourPoint& p = pts[i];
    const ContourPoint& q = pts[(i + 1) % n];
    a += p.x * q.y - q.x * p.y;
  }
  return 0.5 * a;
}

double contour_diameter(const std::vector<ContourPoint>& pts) {
  double d2 = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double dx = pts[i].x - pts[j].x, dy = pts[i].y - pts[j].y;
      d2 = std::max(d2, dx * dx + dy * dy);
    }
  return std::sqrt(d2);
}

bool has_self_intersection(const std::vector<ContourPoint>& pts) {
  const std::size_t n = pts.size();
  if (n < 4) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const ContourPoint& a = pts[i];
    const ContourPoint& b = pts[(i + 1) % n];
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the closing edge
      const ContourPoint& c = pts[j];
      const ContourPoint& d = pts[(j + 1) % n];
      const double o1 = orient(a.x, a.y, b.x, b.y, c.x, c.y);
      const double o2 = orient(a.x, a.y, b.x, b.y, d.x, d.y);
      const double o3 = orient(c.x, c.y, d.x, d.y, a.x, a.y);
      const double o4 = orient(c.x, c.y, d.x, d.y, b.x, b.y);
      if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0)))
        return true;
    }
  }
  return false;
}

InclusionContour trace_inclusion(const Solution& sol) {
  const ModelParams& p = sol.params();
  const std::vector<double> xi = contour_abscissae(p.n_points);
  InclusionContour c;
  c.points.resize(2 * xi.size());
  for (std::size_t j = 0; j < xi.size(); ++j) {
    const cplx zp = sol.map_omega(SideValue{xi[j], Slit::l1, Side::plus});
    const cplx zm = sol.map_omega(SideValue{xi[j], Slit::l1, Side::minus});
    c.points[j] = {xi[j], Side::plus, zp.real(), zp.imag()};
    c.points[2 * xi.size() - 1 - j] = {xi[j], Side::minus, zm.real(), zm.imag()};
  }

  c.diameter = contour_diameter(c.points);
  c.closure_error = std::max(std::abs(endpoint_limit(sol, 0.0, Side::plus) - endpoint_limit(sol, 0.0, Side::minus)),
                             std::abs(endpoint_limit(sol, 1.0, Side::plus) - endpoint_limit(sol, 1.0, Side::minus)));
  if (c.closure_error > 1e3 * p.tol * std::max(1.0, c.diameter))
    throw SolverError("trace_inclusion: contour does not close (closure error " +
                      std::to_string(c.closure_error) + ")");

  c.signed_area = polygon_area(c.points);
  double ymin = INFINITY, ymax = -INFINITY;
  c.min_abs_y = INFINITY;
  for (const auto& q : c.points) {
    ymin = std::min(ymin, q.y);
    ymax = std::max(ymax, q.y);
    c.min_abs_y = std::min(c.min_abs_y, std::abs(q.y));
  }
  c.half_plane_sign = ymin > 0.0 ? 1 : (ymax < 0.0 ? -1 : 0);

  const std::size_t n = c.points.size();
  if (std::abs(c.signed_area) > 1e-12 * c.diameter * c.diameter) {
    double cx = 0.0, cy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const ContourPoint& a = c.points[i];
      const ContourPoint& b = c.points[(i + 1) % n];
      const double cr = a.x * b.y - b.x * a.y;
      cx += (a.x + b.x) * cr;
      cy += (a.y + b.y) * cr;
    }
    c.centroid = {cx / (6.0 * c.signed_area), cy / (6.0 * c.signed_area)};
  } else {
    double cx = 0.0, cy = 0.0;
    for (const auto& q : c.points) cx += q.x, cy += q.y;
    c.centroid = {cx / n, cy / n};
  }
  c.self_intersecting = has_self_intersection(c.points);
  return c;
}

InclusionContour trace_inclusion(const ModelParams& p) { return trace_inclusion(Solution(p)); }

BoundaryResidual verify_boundary_condition(const InclusionContour& contour, const Solution& sol) {
  BoundaryResidual r;
  const double lambda = sol.derived().lambda, tau1 = sol.params().tau1_hat, b1 = sol.derived().b1;
  for (const auto& q : contour.points) {
    const cplx F = sol.phi1().phi1_side(SideValue{q.xi, Slit::l1, q.side});
    r.max_re = std::max(r.max_re, std::abs(F.real() - tau1 * q.x / lambda));
    r.max_im = std::max(r.max_im, std::abs(F.imag() - b1));
    r.scale = std::max(r.scale, std::abs(F));
  }
  return r;
}

}  // namespace antiplane

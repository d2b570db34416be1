#include <algorithm>
#include <cmath>
#include <random>

#include "antiplane/elliptic.hpp"
#include "antiplane/shape.hpp"
#include "doctest.h"

using namespace antiplane;

namespace {

ModelParams stresses(double kappa, double tau1, double m) {
  ModelParams p;
  p.kappa = kappa;
  p.tau1_hat = tau1;
  p.tau1_inf_hat = -2.0;
  p.m = m;
  p.n_points = 200;
  return p;
}

std::vector<ContourPoint> square(double s) {
  return {{0, Side::plus, 0, 0}, {0, Side::plus, s, 0}, {0, Side::plus, s, s}, {0, Side::plus, 0, s}};
}

}  // namespace

TEST_CASE("polygon helpers") {
  CHECK(polygon_area(square(2.0)) == doctest::Approx(4.0));
  CHECK(contour_diameter(square(1.0)) == doctest::Approx(std::sqrt(2.0)));
  CHECK_FALSE(has_self_intersection(square(1.0)));
  std::vector<ContourPoint> bow = square(1.0);
  std::swap(bow[2], bow[3]);
  CHECK(has_self_intersection(bow));
  CHECK(polygon_area(bow) == doctest::Approx(0.0));
  const std::vector<double> xi = contour_abscissae(8);
  CHECK(xi.size() == 8);
  CHECK(std::is_sorted(xi.begin(), xi.end()));
  CHECK(xi.front() > 0.0);
  CHECK(xi.back() < 1.0);
  CHECK(std::abs(xi[0] + xi[7] - 1.0) < 1e-15);
}

TEST_CASE("contour at the defaults") {
  const Solution s{ModelParams{}};
  const InclusionContour c = trace_inclusion(s);
  CHECK(c.points.size() == 800);
  CHECK(c.half_plane_sign == 1);
  CHECK(c.min_abs_y > 3.0);
  CHECK(c.closure_error < 1e-4 * c.diameter);
  CHECK(c.diameter == doctest::Approx(0.306227).epsilon(1e-5));
  CHECK(c.signed_area == doctest::Approx(-0.0552734).epsilon(1e-5));
  CHECK_FALSE(c.self_intersecting);

  // Image of l0 lies on the real axis, monotone in xi.
  std::vector<double> xs;
  for (int j = 0; j < 40; ++j) {
    const double xi = 4.0 * std::pow(1.1, j + 1);
    const cplx w = s.map_omega(SideValue{xi, Slit::l0, Side::plus});
    CHECK(std::abs(w.imag()) < 1e-6 * c.diameter);
    xs.push_back(w.real());
  }
  const bool up = std::is_sorted(xs.begin(), xs.end());
  const bool down = std::is_sorted(xs.rbegin(), xs.rend());
  CHECK((up || down));

  const BoundaryResidual r = verify_boundary_condition(c, s);
  CHECK(r.max_re < 1e-5 * r.scale);
  CHECK(r.max_im < 1e-5 * r.scale);

  // Contour samples are independent of evaluation order.
  std::vector<std::size_t> order(c.points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), std::mt19937(1));
  for (std::size_t i : order) {
    const ContourPoint& q = c.points[i];
    const cplx w = s.map_omega(SideValue{q.xi, Slit::l1, q.side});
    CHECK(w.real() == q.x);
    CHECK(w.imag() == q.y);
  }
}

TEST_CASE("linear scaling of the loads") {
  ModelParams p;
  p.N0_star = 0.4;
  p.b0 = 0.3;
  p.n_points = 100;
  const InclusionContour a = trace_inclusion(p);
  const double s = 2.5;
  p.N0_star *= s;
  p.N1 *= s;
  p.b0 *= s;
  const InclusionContour b = trace_inclusion(p);
  double err = 0.0;
  for (std::size_t i = 0; i < a.points.size(); ++i)
    err = std::max(err, std::hypot(b.points[i].x - s * a.points[i].x, b.points[i].y - s * a.points[i].y));
  CHECK(err < 1e-8 * b.diameter);
}

TEST_CASE("boundary residuals do not depend on the free constants") {
  for (double b0 : {0.0, 1.2})
    for (double n0 : {0.0, -0.8}) {
      ModelParams p;
      p.b0 = b0;
      p.N0_star = n0;
      p.n_points = 100;
      const Solution s(p);
      const InclusionContour c = trace_inclusion(s);
      const BoundaryResidual r = verify_boundary_condition(c, s);
      CHECK(r.max_re < 1e-5 * r.scale);
      CHECK(r.max_im < 1e-5 * r.scale);
    }
}

TEST_CASE("matched strains give a flat inclusion") {
  // tau1 / mu1 = tau1_inf / mu0: the remote field is undisturbed by a
  // horizontal slit, so the contour collapses onto a segment y = const.
  const InclusionContour c = trace_inclusion(stresses(0.5, -1.0, 1.6));
  CHECK(std::abs(c.signed_area) < 1e-10 * c.diameter * c.diameter);
  const double k = 1.0 / std::sqrt(1.6);
  const double y = 3.14159265358979323846 / (k * complete_elliptic_k(k));
  for (const ContourPoint& q : c.points) CHECK(std::abs(q.y - y) < 1e-8 * c.diameter);
  // Either side of the matched ratio the orientation flips.
  CHECK(trace_inclusion(stresses(0.45, -1.0, 1.6)).signed_area < 0.0);
  CHECK(trace_inclusion(stresses(0.55, -1.0, 1.6)).signed_area > 0.0);
}

TEST_CASE("shapes on either side of the boundary") {
  const InclusionContour up = trace_inclusion(stresses(0.5, -1.0, 2.0));
  CHECK(up.half_plane_sign == 1);
  const InclusionContour down = trace_inclusion(stresses(0.5, -3.0, 2.0));
  CHECK(down.half_plane_sign == -1);
}

TEST_CASE("diagnostics") {
  const Diagnostics d = run_diagnostics(ModelParams{});
  CHECK(d.pass);
  CHECK(d.embedded);
  CHECK(d.slots.size() == diagnostic_slot_names().size());
  for (const DiagnosticSlot& s : d.slots) {
    if (s.name == "min_abs_y") CHECK(s.status == SlotStatus::info);
    else CHECK_MESSAGE(s.status == SlotStatus::pass, s.name << " = " << s.value);
  }
  REQUIRE(d.derived.has_value());
  CHECK(d.derived->n_a == 0);

  ModelParams bad;
  bad.kappa = 1.0;
  const Diagnostics v = run_diagnostics(bad);
  CHECK(v.validation_failed);
  CHECK_FALSE(v.pass);
  CHECK(v.messages.at(0).find("kappa singular") != std::string::npos);

  // A shape that crosses y = 0 is still reported, with a message.
  const Diagnostics x = run_diagnostics(stresses(0.9, -1.0, 1.6));
  CHECK_FALSE(x.solver_failed);
  REQUIRE(x.contour.has_value());
  CHECK_FALSE(x.embedded);
  CHECK(std::find(x.messages.begin(), x.messages.end(), "contour crosses the half-plane boundary y = 0") !=
        x.messages.end());
}

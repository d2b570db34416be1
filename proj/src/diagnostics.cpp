#include <algorithm>
#include <cmath>

#include "antiplane/shape.hpp"

namespace antiplane {

namespace {

struct SlotTable {
  std::vector<DiagnosticSlot> slots;

  void set(const std::string& name, double value, double threshold) {
    for (auto& s : slots)
      if (s.name == name) {
        s.value = value;
        s.threshold = threshold;
        s.status = value <= threshold ? SlotStatus::pass : SlotStatus::fail;
        if (!std::isfinite(value)) s.status = SlotStatus::fail;
        return;
      }
  }
  void info(const std::string& name, double value) {
    for (auto& s : slots)
      if (s.name == name) {
        s.value = value;
        s.status = SlotStatus::info;
      }
  }
};

std::vector<double> midpoints(int n, double a, double b) {
  std::vector<double> x(n);
  for (int j = 0; j < n; ++j) x[j] = a + (b - a) * (j + 0.5) / n;
  return x;
}

}  // namespace

const DiagnosticSlot* Diagnostics::slot(const std::string& name) const {
  for (const auto& s : slots)
    if (s.name == name) return &s;
  return nullptr;
}

const std::vector<std::string>& diagnostic_slot_names() {
  static const std::vector<std::string> names = {
      "loop_l0",          "loop_l1",           "removability",       "period_A",
      "period_B",         "jacobi_residual",   "jacobi_snap",        "jacobi_exactly_one",
      "factorization_l0", "factorization_l1",  "jump_phi1_l0",       "jump_phi1_l1",
      "jump_phi2_l0",     "jump_phi2_l1",      "residue_xi0",        "q1_cancellation",
      "infinity_ratio_1e4", "infinity_ratio_1e6", "half_plane_imag", "closure",
      "boundary_re",      "boundary_im",       "min_abs_y"};
  return names;
}

Diagnostics run_diagnostics(const ModelParams& p) {
  Diagnostics out;
  out.params = p;
  SlotTable t;
  for (const auto& n : diagnostic_slot_names()) t.slots.push_back({n, 0.0, 0.0, SlotStatus::skipped});

  const ValidationReport rep = validate(p);
  if (!rep.ok()) {
    out.validation_failed = true;
    out.messages.push_back("validation: " + rep.summary());
    out.slots = t.slots;
    return out;
  }

  const double tol = p.tol;
  std::string stage = "solve";
  try {
    const Solution sol(p);
    const DerivedConstants& d = sol.derived();
    const Phi1Solution& phi1 = sol.phi1();
    const Factorizer& fac = sol.factorizer();
    const Phi2Solution& phi2 = sol.phi2();
    const JacobiSolution& jac = fac.jacobi();
    const double m = p.m, xi0 = p.xi0;

    DerivedSummary ds;
    ds.k = d.k, ds.K = d.K, ds.b1 = d.b1;
    ds.zeta1 = jac.zeta1, ds.sheet1 = jac.sheet1, ds.n_a = jac.n_a, ds.n_b = jac.n_b;
    ds.X_inf = fac.X_infinity();
    const OmegaConstants& mc = phi2.constants();
    ds.M = {mc.M0, mc.M1, mc.M2, mc.M3};
    out.derived = ds;

    stage = "constants";
    const double fourkK = 4.0 * d.k * d.K;
    t.set("loop_l0", std::abs(phi1.loop_integral(Slit::l0) - cplx(0.0, -fourkK)), 1e-9);
    t.set("loop_l1", std::abs(phi1.loop_integral(Slit::l1) - cplx(0.0, fourkK)), 1e-9);
    t.set("removability", phi1.removability_defect() / std::abs(p.N1), 1e-9);
    t.set("period_A", std::abs(phi1.loop_integral(Slit::l0) - d.A), 1e-9);
    const double half_b = gauss_chebyshev1([&](double x) { return 1.0 / std::sqrt(x); }, 4 * p.quad_order, 1.0, m);
    t.set("period_B", std::abs(2.0 * half_b - d.B), 1e-9);

    stage = "jacobi";
    t.set("jacobi_residual", jac.residual, 1e-8);
    t.set("jacobi_snap", jac.snap_distance, kSnapTolerance);
    t.set("jacobi_exactly_one", jac.exactly_one ? 0.0 : 1.0, 0.5);

    stage = "factorization";
    auto X = [&](cplx z, Sheet s) { return fac.X_at(SurfacePoint{z, s}); };
    double fl0 = 0.0, fl1 = 0.0;
    for (double x : midpoints(10, 0.0, 1.0)) {
      const cplx r = eps_limit([&](double e) { return X(cplx(x, e), Sheet::upper) / X(cplx(x, -e), Sheet::lower); });
      fl1 = std::max(fl1, std::abs(r - 1.0));
    }
    for (double x : midpoints(10, m, 4.0 * m)) {
      const cplx r = eps_limit([&](double e) { return X(cplx(x, e), Sheet::upper) / X(cplx(x, -e), Sheet::lower); });
      fl0 = std::max(fl0, std::abs(r + 1.0));
    }
    t.set("factorization_l0", fl0, tol);
    t.set("factorization_l1", fl1, tol);

    stage = "jumps";
    auto P1 = [&](cplx z, Sheet s) { return phi1.phi1(SurfacePoint{z, s}); };
    auto P2 = [&](cplx z, Sheet s) { return phi2.phi2(SurfacePoint{z, s}); };
    // Limits at (xi, v) from the upper sheet above and the lower sheet below.
    auto sides = [&](auto&& F, double x) {
      const cplx a = eps_limit([&](double e) { return F(cplx(x, e), Sheet::upper); });
      const cplx b = eps_limit([&](double e) { return F(cplx(x, -e), Sheet::lower); });
      return std::pair<cplx, cplx>{a, b};
    };
    const std::vector<double> s1 = midpoints(20, 0.0, 1.0), s0 = midpoints(20, m, 4.0 * m);
    double sc1 = 0.0, sc2 = 0.0;
    std::vector<std::pair<cplx, cplx>> p1_l1, p1_l0, p2_l1, p2_l0;
    for (double x : s1) {
      p1_l1.push_back(sides(P1, x));
      p2_l1.push_back(sides(P2, x));
    }
    for (double x : s0) {
      p1_l0.push_back(sides(P1, x));
      p2_l0.push_back(sides(P2, x));
    }
    for (auto* v : {&p1_l1, &p1_l0})
      for (auto& [a, b] : *v) sc1 = std::max({sc1, std::abs(a), std::abs(b)});
    for (auto* v : {&p2_l1, &p2_l0})
      for (auto& [a, b] : *v) sc2 = std::max({sc2, std::abs(a), std::abs(b)});
    double j10 = 0, j11 = 0, j20 = 0, j21 = 0;
    for (std::size_t i = 0; i < s1.size(); ++i) {
      j11 = std::max(j11, std::abs(p1_l1[i].first - p1_l1[i].second - cplx(0.0, 2.0 * d.b1)));
      const double re1 = p1_l1[i].first.real();
      j21 = std::max(j21, std::abs(p2_l1[i].first - p2_l1[i].second - cplx(0.0, 2.0 * re1)));
    }
    for (std::size_t i = 0; i < s0.size(); ++i) {
      j10 = std::max(j10, std::abs(p1_l0[i].first - p1_l0[i].second - cplx(0.0, 2.0 * p.b0)));
      j20 = std::max(j20, std::abs(p2_l0[i].first + p2_l0[i].second));
    }
    t.set("jump_phi1_l0", j10 / sc1, tol);
    t.set("jump_phi1_l1", j11 / sc1, tol);
    t.set("jump_phi2_l0", j20 / sc2, tol);
    t.set("jump_phi2_l1", j21 / sc2, tol);

    stage = "poles";
    double res = 0.0;
    for (Sheet s : {Sheet::upper, Sheet::lower}) {
      cplx a = 0.0;
      const double r = 1e-3;
      for (int k = 0; k < 4; ++k) {
        const cplx e = std::polar(r, 0.5 * kPi * k);
        const SurfacePoint q{xi0 + e, s};
        a += (phi2.psi_at(q) + phi2.omega_rational(q)) * e;
      }
      res = std::max(res, std::abs(a / 4.0));
    }
    t.set("residue_xi0", res, 1e-8);
    const SurfacePoint q1{jac.zeta1, jac.sheet1};
    t.set("q1_cancellation", std::abs(phi2.psi_at(q1) + phi2.omega_rational(q1)), 1e-8);

    stage = "infinity";
    auto ratio_err = [&](double R) {
      const SurfacePoint q{cplx(0.0, R), Sheet::upper};
      return std::abs(phi1.phi1(q) / phi2.phi2(q) - d.infinity_ratio) / std::abs(d.infinity_ratio);
    };
    t.set("infinity_ratio_1e4", ratio_err(1e4), 1e-1);
    t.set("infinity_ratio_1e6", ratio_err(1e6), 1e-2);

    stage = "contour";
    const InclusionContour c = trace_inclusion(sol);
    out.contour = c;
    const double diam = c.diameter;
    double imax = 0.0;
    for (double x : s0)
      for (Side sd : {Side::plus, Side::minus})
        imax = std::max(imax, std::abs(sol.map_omega(SideValue{x, Slit::l0, sd}).imag()));
    t.set("half_plane_imag", imax / diam, tol);
    t.set("closure", c.closure_error / diam, 1e-4);
    const BoundaryResidual br = verify_boundary_condition(c, sol);
    t.set("boundary_re", br.max_re / br.scale, 1e-5);
    t.set("boundary_im", br.max_im / br.scale, 1e-5);
    t.info("min_abs_y", c.min_abs_y);
    out.embedded = c.half_plane_sign != 0;
    if (!out.embedded) out.messages.push_back("contour crosses the half-plane boundary y = 0");
    if (c.self_intersecting) out.messages.push_back("contour self-intersection detected");
  } catch (const ValidationError& e) {
    out.validation_failed = true;
    out.messages.push_back("validation: " + std::string(e.what()));
  } catch (const std::exception& e) {
    out.solver_failed = true;
    out.messages.push_back(stage + ": " + e.what());
  }

  out.slots = t.slots;
  out.pass = !out.validation_failed && !out.solver_failed &&
             std::none_of(out.slots.begin(), out.slots.end(),
                          [](const DiagnosticSlot& s) { return s.status == SlotStatus::fail || s.status == SlotStatus::skipped; });
  return out;
}

}  // namespace antiplane

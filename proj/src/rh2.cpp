#include "antiplane/rh2.hpp"

#include <cmath>
#include <utility>

namespace antiplane {

Phi2Solution::Phi2Solution(const ModelParams& p, const DerivedConstants& d, Phi1Solution phi1,
                           Factorizer fac)
    : phi1_(std::move(phi1)),
      fac_(std::move(fac)),
      xi0_(p.xi0),
      m_(p.m),
      N0_(p.N0_star),
      zeta0_(p.zeta0),
      u0_(sqrt_p(p.zeta0, p.m)),
      u0bar_(sqrt_p(std::conj(p.zeta0), p.m)) {
  build_densities(p.quad_order);
  assemble_constants(p, d);
}

void Phi2Solution::build_densities(int n) {
  struct Sample {
    double Yp, Yhat, g0;
  };
  auto sample = [&](double tau) {
    const Factorizer::L1Parts q = fac_.l1_parts(tau);
    const double x = abs_sqrt_p(tau, m_) * q.sigma;
    const double ea = 2.0 * std::exp(q.A);
    const double shx = x == 0.0 ? 1.0 : std::sinh(x) / x;
    return Sample{ea * std::cosh(x), ea * std::sqrt(m_ - tau) * q.sigma * shx, phi1_.g0(tau)};
  };
  std::vector<double> f1, f3a, f3b;
  for (double t : cheb2_nodes(n)) {
    const Sample s = sample(t);
    const double dt = t - xi0_;
    f1.push_back(std::sqrt(m_ - t) * s.g0 * s.Yp / (dt * dt));
    f3a.push_back(s.Yhat / dt);
    f3b.push_back(s.g0 * s.Yhat);
  }
  std::vector<double> f2, f3a1, f3b1, fb;
  for (double t : cheb1_nodes(n)) {
    const Sample s = sample(t);
    const double dt = t - xi0_, w = t * (1.0 - t);
    f2.push_back(dt * s.Yp / std::sqrt(m_ - t));
    f3a1.push_back(w * s.Yhat / dt);
    f3b1.push_back(w * s.g0 * s.Yhat);
    fb.push_back(N0_ * f2.back() + f3b1.back());
  }
  std::vector<double> fa(f1.size());
  for (std::size_t i = 0; i < fa.size(); ++i) fa[i] = N0_ * f3a[i] + f1[i];
  dens_.F1 = cheb2_from_samples(f1);
  dens_.F3a = cheb2_from_samples(f3a);
  dens_.F3b = cheb2_from_samples(f3b);
  dens_.Fa = cheb2_from_samples(fa);
  dens_.F2 = cheb1_from_samples(f2);
  dens_.F3a_first = cheb1_from_samples(f3a1);
  dens_.F3b_first = cheb1_from_samples(f3b1);
  dens_.Fb = cheb1_from_samples(fb);

  // Gauss-Chebyshev value of int_0^1 Fb / (sqrt(tau (1 - tau)) (tau - xi0)).
  const std::vector<double> nodes = cheb1_nodes(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) acc += fb[i] / (nodes[i] - xi0_);
  c_.M3 = -(kPi / n) * acc / (4.0 * kPi);
}

void Phi2Solution::assemble_constants(const ModelParams& p, const DerivedConstants& d) {
  const JacobiSolution& j = fac_.jacobi();
  c_.M2 = -c_.M3 + p.tau1_hat * p.N1 / (d.lambda * (p.tau1_inf_hat - p.tau1_hat) * fac_.X_infinity());
  const cplx z1 = j.zeta1;
  const cplx u1 = sheet_sign(j.sheet1) * sqrt_p(z1, m_);
  const cplx pq = psi_at(z1, u1);
  if (!std::isfinite(pq.real()) || !std::isfinite(pq.imag()))
    throw SolverError("assemble_constants: Psi(q1) is not finite");
  c_.P = pq.real();
  c_.Q = pq.imag();
  const cplx k0 = 2.0 * u1 / (z1 - xi0_);
  const cplx k1 = (u1 + u0_) / (z1 - zeta0_);
  const cplx k2 = (u1 - u0bar_) / (z1 - std::conj(zeta0_));
  c_.P0 = k0.real(), c_.Q0 = k0.imag();
  c_.P1 = k1.real(), c_.Q1 = k1.imag();
  c_.P2 = k2.real(), c_.Q2 = k2.imag();
  const double den = c_.Q2 - c_.Q1;
  if (std::abs(den) < 1e-10 * (std::abs(c_.Q1) + std::abs(c_.Q2)))
    throw SolverError("assemble_constants: Q2 - Q1 vanishes; perturb zeta0");
  c_.M1 = ((c_.P1 + c_.P2) * c_.M2 + c_.P0 * c_.M3 + c_.Q) / den;
  c_.M0 = (c_.P2 - c_.P1) * c_.M1 + (c_.Q1 + c_.Q2) * c_.M2 + c_.Q0 * c_.M3 - c_.P;
}

cplx Phi2Solution::g2_side(double xi, Side side) const {
  return cplx(0.0, 2.0 * phi1_.re_phi1_plus_l1(xi, side));
}

double Phi2Solution::I3(double xi, Side side, ChebKind kind) const {
  const double s = side_sign(side);
  const double dx = xi - xi0_;
  const double r = abs_sqrt_p(xi, m_);
  if (kind == ChebKind::second)
    return (N0_ * dx * pv_cheb2(dens_.F3a, xi) + s * r / dx * pv_cheb2(dens_.F3b, xi)) / (2.0 * kPi);
  return (N0_ * dx * pv_cheb1(dens_.F3a_first, xi) + s * r / dx * pv_cheb1(dens_.F3b_first, xi)) /
         (2.0 * kPi);
}

cplx Phi2Solution::psi_side(double xi, Side side) const {
  const double s = side_sign(side);
  const double dx = xi - xi0_;
  const double r = abs_sqrt_p(xi, m_);
  const double Xs = fac_.X_plus_l1(xi, side);
  const cplx free = kI / Xs * (N0_ + s * r * phi1_.g0(xi) / dx);
  const double I1 = dx / (2.0 * kPi) * pv_cheb2(dens_.F1, xi);
  const double I2 = N0_ * r / (2.0 * kPi * dx) * pv_cheb1(dens_.F2, xi);
  return free + I1 + s * I2 + I3(xi, side);
}

cplx Phi2Solution::psi_at(cplx zeta, cplx u, int side) const {
  if (zeta == cplx(xi0_)) throw PoleError("psi_at: evaluation exactly at xi0");
  const cplx dz = zeta - xi0_;
  return (dz * cauchy_transform(dens_.Fa, zeta, side) +
          kI * u / dz * cauchy_transform(dens_.Fb, zeta, side)) /
         (2.0 * kPi);
}

cplx Phi2Solution::psi_at(const SurfacePoint& pt) const { return psi_at(pt.zeta, u_at(pt, m_)); }

cplx Phi2Solution::omega_rational(cplx zeta, cplx u) const {
  if (zeta == zeta0_ || zeta == std::conj(zeta0_) || zeta == cplx(xi0_))
    throw PoleError("omega_rational: evaluation at a pole");
  const cplx a(c_.M1, c_.M2);
  return c_.M0 + a * (u + u0_) / (zeta - zeta0_) - std::conj(a) * (u - u0bar_) / (zeta - std::conj(zeta0_)) +
         kI * (2.0 * c_.M3) * u / (zeta - xi0_);
}

cplx Phi2Solution::omega_rational(const SurfacePoint& pt) const {
  return omega_rational(pt.zeta, u_at(pt, m_));
}

cplx Phi2Solution::phi2(const SurfacePoint& pt) const {
  const cplx u = u_at(pt, m_);
  return fac_.X_at(pt) * (psi_at(pt.zeta, u) + omega_rational(pt.zeta, u));
}

cplx Phi2Solution::phi2_side(const SideValue& sv) const {
  const cplx u = side_u(sv, m_);
  if (sv.slit == Slit::l1)
    return fac_.X_plus_l1(sv.xi, sv.side) * (psi_side(sv.xi, sv.side) + omega_rational(sv.xi, u));
  return fac_.X_side(sv) * (psi_at(sv.xi, u) + omega_rational(sv.xi, u));
}

}  // namespace antiplane

#pragma once

#include <algorithm>
#include <cmath>
#include <type_traits>
#include <vector>

#include "antiplane/common.hpp"
#include "antiplane/surface.hpp"

namespace antiplane {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int n);

enum class ChebKind { first, second };

// Chebyshev expansion on [a, b] in the variable x = (2 tau - a - b) / (b - a).
// First kind:  f = c_0/2 + sum_{l>=1} c_l T_l(x), coeffs[l] = c_l.
// Second kind: f = sum_{l>=1} d_l U_{l-1}(x),     coeffs[l-1] = d_l.
template <class T>
struct ChebSeries {
  ChebKind kind = ChebKind::first;
  std::vector<T> coeffs;
  double a = 0.0;
  double b = 1.0;

  double to_unit(double tau) const { return (2.0 * tau - a - b) / (b - a); }
  cplx to_unit(cplx zeta) const { return (2.0 * zeta - a - b) / (b - a); }
  double half_length() const { return 0.5 * (b - a); }

  T operator()(double tau) const;
  // max(|last two coeffs|) / max|coeff|.
  double tail_ratio() const;
};

// theta_j = (2j - 1) pi / (2n), j = 1..n, mapped to [a, b].
std::vector<double> cheb1_nodes(int n, double a = 0.0, double b = 1.0);
// theta_j = j pi / (n + 1), j = 1..n, mapped to [a, b].
std::vector<double> cheb2_nodes(int n, double a = 0.0, double b = 1.0);

template <class T>
ChebSeries<T> cheb1_from_samples(const std::vector<T>& f, double a = 0.0, double b = 1.0) {
  const int n = static_cast<int>(f.size());
  ChebSeries<T> s{ChebKind::first, std::vector<T>(n, T(0)), a, b};
  for (int l = 0; l < n; ++l) {
    T acc(0);
    for (int j = 1; j <= n; ++j) acc += f[j - 1] * std::cos(l * (2 * j - 1) * kPi / (2.0 * n));
    s.coeffs[l] = acc * (2.0 / n);
  }
  return s;
}

template <class T>
ChebSeries<T> cheb2_from_samples(const std::vector<T>& f, double a = 0.0, double b = 1.0) {
  const int n = static_cast<int>(f.size());
  ChebSeries<T> s{ChebKind::second, std::vector<T>(n, T(0)), a, b};
  const double h = kPi / (n + 1);
  for (int l = 1; l <= n; ++l) {
    T acc(0);
    for (int j = 1; j <= n; ++j) acc += f[j - 1] * (std::sin(j * h) * std::sin(j * l * h));
    s.coeffs[l - 1] = acc * (2.0 / (n + 1));
  }
  return s;
}

template <class F>
auto cheb1_coeffs(F&& f, int n, double a = 0.0, double b = 1.0) {
  using T = std::decay_t<decltype(f(0.0))>;
  std::vector<T> v;
  for (double t : cheb1_nodes(n, a, b)) v.push_back(f(t));
  return cheb1_from_samples(v, a, b);
}

template <class F>
auto cheb2_coeffs(F&& f, int n, double a = 0.0, double b = 1.0) {
  using T = std::decay_t<decltype(f(0.0))>;
  std::vector<T> v;
  for (double t : cheb2_nodes(n, a, b)) v.push_back(f(t));
  return cheb2_from_samples(v, a, b);
}

// sum_l c_l U_{l-1}(y) over coeffs[1..], and sum_l d_l T_l(y) over coeffs[0..].
template <class T>
T sum_first_kind_U(const std::vector<T>& c, double y) {
  T acc(0);
  double u_prev = 0.0, u = 1.0;  // U_{-1}, U_0
  for (std::size_t l = 1; l < c.size(); ++l) {
    acc += c[l] * u;
    const double next = 2.0 * y * u - u_prev;
    u_prev = u;
    u = next;
  }
  return acc;
}

template <class T>
T sum_second_kind_T(const std::vector<T>& d, double y) {
  T acc(0);
  double t_prev = 1.0, t = y;  // T_0, T_1
  for (std::size_t l = 0; l < d.size(); ++l) {
    acc += d[l] * t;
    const double next = 2.0 * y * t - t_prev;
    t_prev = t;
    t = next;
  }
  return acc;
}

template <class T>
T ChebSeries<T>::operator()(double tau) const {
  const double x = to_unit(tau);
  T acc(0);
  if (kind == ChebKind::first) {
    double t_prev = 1.0, t = x;
    if (!coeffs.empty()) acc = coeffs[0] * 0.5;
    for (std::size_t l = 1; l < coeffs.size(); ++l) {
      acc += coeffs[l] * t;
      const double next = 2.0 * x * t - t_prev;
      t_prev = t;
      t = next;
    }
  } else {
    double u_prev = 0.0, u = 1.0;
    for (std::size_t l = 0; l < coeffs.size(); ++l) {
      acc += coeffs[l] * u;
      const double next = 2.0 * x * u - u_prev;
      u_prev = u;
      u = next;
    }
  }
  return acc;
}

template <class T>
double ChebSeries<T>::tail_ratio() const {
  double mx = 0.0;
  for (const T& c : coeffs) mx = std::max(mx, static_cast<double>(std::abs(c)));
  if (mx == 0.0 || coeffs.size() < 2) return 0.0;
  const std::size_t n = coeffs.size();
  return std::max(std::abs(coeffs[n - 1]), std::abs(coeffs[n - 2])) / mx;
}

inline void check_open_interval(double xi, double a, double b) {
  if (!(xi > a && xi < b)) throw std::invalid_argument("principal value point outside the interval");
}

// PV int_a^b f(tau) / (sqrt((tau-a)(b-tau)) (tau - xi)) dtau for a first-kind series.
template <class T>
T pv_cheb1(const ChebSeries<T>& s, double xi) {
  check_open_interval(xi, s.a, s.b);
  return sum_first_kind_U(s.coeffs, s.to_unit(xi)) * (kPi / s.half_length());
}

// PV int_a^b sqrt((tau-a)(b-tau)) f(tau) / (tau - xi) dtau for a second-kind series.
template <class T>
T pv_cheb2(const ChebSeries<T>& s, double xi) {
  check_open_interval(xi, s.a, s.b);
  return sum_second_kind_T(s.coeffs, s.to_unit(xi)) * (-kPi * s.half_length());
}

template <class F>
auto pv_cheb1(F&& f, double xi, int n) { return pv_cheb1(cheb1_coeffs(f, n), xi); }
template <class F>
auto pv_cheb2(F&& f, double xi, int n) { return pv_cheb2(cheb2_coeffs(f, n), xi); }

// sqrt(z-1) sqrt(z+1) and w = 1/(z + sqrt(z-1) sqrt(z+1)) with |w| <= 1.
// side = +1 / -1 selects the limit from above / below when z lies on [-1, 1].
struct JoukowskiPair {
  cplx sq;
  cplx w;
};
JoukowskiPair joukowski(cplx z, int side);

// Cauchy integral int_a^b weight(tau) f(tau) / (tau - zeta) dtau, with weight
// 1/sqrt((tau-a)(b-tau)) for first-kind and sqrt((tau-a)(b-tau)) for
// second-kind series. For zeta on [a, b] pass side = +1 or -1.
template <class T>
cplx cauchy_transform(const ChebSeries<T>& s, cplx zeta, int side = 0) {
  const JoukowskiPair jw = joukowski(s.to_unit(zeta), side);
  cplx acc = 0.0;
  if (s.kind == ChebKind::first) {
    for (std::size_t l = s.coeffs.size(); l-- > 1;) acc = (acc + s.coeffs[l]) * jw.w;
    if (!s.coeffs.empty()) acc += 0.5 * cplx(s.coeffs[0]);
    return -kPi / jw.sq * acc / s.half_length();
  }
  for (std::size_t l = s.coeffs.size(); l-- > 0;) acc = (acc + s.coeffs[l]) * jw.w;
  return -kPi * acc * s.half_length();
}

// int_a^b f(tau) / sqrt((tau-a)(b-tau)) dtau by the n-point Gauss-Chebyshev rule.
template <class F>
auto gauss_chebyshev1(F&& f, int n, double a = 0.0, double b = 1.0) {
  using T = std::decay_t<decltype(f(0.0))>;
  T acc(0);
  for (double t : cheb1_nodes(n, a, b)) acc += f(t);
  return acc * (kPi / n);
}

// int_m^inf numer(xi) / sqrt|p(xi)| dxi after xi = 1/tau, with the weight
// 1/sqrt(tau (1/m - tau)) handled by an n-point Gauss-Chebyshev rule.
template <class F>
auto semi_infinite(F&& numer, double m, int n) {
  using T = std::decay_t<decltype(numer(1.0))>;
  const double far1 = std::abs(numer(1e8)), far2 = std::abs(numer(1e16));
  if (!std::isfinite(far1) || !std::isfinite(far2) || !(far2 <= 10.0 * far1 + 1e-300))
    throw SolverError("semi_infinite: integrand does not decay");
  auto smooth = [&](double tau) -> T { return numer(1.0 / tau) / std::sqrt(1.0 - tau); };
  return gauss_chebyshev1(smooth, n, 0.0, 1.0 / m) / std::sqrt(m);
}

enum class EndpointKind { regular, inverse_sqrt };

// Polyline path; flags[i] describes waypoint i, sheets[i] the sheet of segment i.
struct PathSpec {
  std::vector<cplx> points;
  std::vector<EndpointKind> flags;
  std::vector<Sheet> sheets;
};

struct PathNode {
  cplx xi;
  cplx weight;  // includes dxi
  Sheet sheet;
  std::size_t segment;
};

// Composite Gauss-Legendre nodes along the path with panels no longer than
// max_panel; flagged endpoints get the t^2 substitution.
std::vector<PathNode> discretize(const PathSpec& path, int n, double max_panel = 0.1);

template <class F>
cplx path_integral(F&& f, const PathSpec& path, int n, double max_panel = 0.1) {
  cplx acc = 0.0;
  for (const PathNode& nd : discretize(path, n, max_panel)) {
    const cplx v = f(nd.xi);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw SolverError("path_integral: non-finite integrand at a node");
    acc += nd.weight * v;
  }
  return acc;
}

}  // namespace antiplane

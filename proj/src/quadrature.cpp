#include "antiplane/quadrature.hpp"

#include <stdexcept>

namespace antiplane {

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  QuadratureRule r{std::vector<double>(n), std::vector<double>(n)};
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int j = 2; j <= n; ++j) {
      const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

std::vector<double> cheb1_nodes(int n, double a, double b) {
  std::vector<double> t(n);
  for (int j = 1; j <= n; ++j) {
    const double x = std::cos((2 * j - 1) * kPi / (2.0 * n));
    t[j - 1] = 0.5 * (a + b) + 0.5 * (b - a) * x;
  }
  return t;
}

std::vector<double> cheb2_nodes(int n, double a, double b) {
  std::vector<double> t(n);
  for (int j = 1; j <= n; ++j) {
    const double x = std::cos(j * kPi / (n + 1));
    t[j - 1] = 0.5 * (a + b) + 0.5 * (b - a) * x;
  }
  return t;
}

JoukowskiPair joukowski(cplx z, int side) {
  cplx sq;
  if (side != 0 && z.imag() == 0.0 && std::abs(z.real()) <= 1.0) {
    const double x = z.real();
    sq = cplx(0.0, side * std::sqrt((1.0 - x) * (1.0 + x)));
  } else {
    sq = std::sqrt(z - 1.0) * std::sqrt(z + 1.0);
  }
  return {sq, 1.0 / (z + sq)};
}

std::vector<PathNode> discretize(const PathSpec& path, int n, double max_panel) {
  const std::size_t nseg = path.points.size() < 2 ? 0 : path.points.size() - 1;
  if (!path.flags.empty() && path.flags.size() != path.points.size())
    throw std::invalid_argument("PathSpec: flags size mismatch");
  if (!path.sheets.empty() && path.sheets.size() != nseg)
    throw std::invalid_argument("PathSpec: sheets size mismatch");
  const QuadratureRule gl = gauss_legendre(n);
  auto flagged = [&](std::size_t i) {
    return !path.flags.empty() && path.flags[i] == EndpointKind::inverse_sqrt;
  };
  std::vector<PathNode> out;
  // Piece from a to b; if sing_at_a, xi = a + (b - a) t^2.
  auto add_piece = [&](cplx a, cplx b, bool sing_at_a, Sheet sheet, std::size_t seg) {
    const double len = std::abs(b - a);
    if (len == 0.0) return;
    const int panels = std::max(1, static_cast<int>(std::ceil(len / max_panel)));
    for (int p = 0; p < panels; ++p) {
      const double t0 = static_cast<double>(p) / panels, t1 = static_cast<double>(p + 1) / panels;
      for (int i = 0; i < n; ++i) {
        const double t = 0.5 * (t0 + t1) + 0.5 * (t1 - t0) * gl.nodes[i];
        const double wt = 0.5 * (t1 - t0) * gl.weights[i];
        if (sing_at_a)
          out.push_back({a + (b - a) * (t * t), (b - a) * (2.0 * t * wt), sheet, seg});
        else
          out.push_back({a + (b - a) * t, (b - a) * wt, sheet, seg});
      }
    }
  };
  for (std::size_t s = 0; s < nseg; ++s) {
    const cplx a = path.points[s], b = path.points[s + 1];
    const Sheet sheet = path.sheets.empty() ? Sheet::upper : path.sheets[s];
    const bool fa = flagged(s), fb = flagged(s + 1);
    if (fa && fb) {
      const cplx mid = 0.5 * (a + b);
      add_piece(a, mid, true, sheet, s);
      // Reverse orientation of the second half so the flagged end is at t = 0.
      const std::size_t first = out.size();
      add_piece(b, mid, true, sheet, s);
      for (std::size_t i = first; i < out.size(); ++i) out[i].weight = -out[i].weight;
    } else if (fb) {
      const std::size_t first = out.size();
      add_piece(b, a, true, sheet, s);
      for (std::size_t i = first; i < out.size(); ++i) out[i].weight = -out[i].weight;
    } else {
      add_piece(a, b, fa, sheet, s);
    }
  }
  return out;
}

}  // namespace antiplane

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "antiplane/factorization.hpp"
#include "antiplane/params.hpp"
#include "antiplane/rh1.hpp"
#include "antiplane/rh2.hpp"

namespace antiplane {

// Full solve for one parameter set. Immutable after construction.
class Solution {
 public:
  explicit Solution(const ModelParams& p);

  const ModelParams& params() const { return p_; }
  const DerivedConstants& derived() const { return d_; }
  const Phi1Solution& phi1() const { return phi2_.phi1(); }
  const Factorizer& factorizer() const { return phi2_.factorizer(); }
  const Phi2Solution& phi2() const { return phi2_; }

  // omega = -i lambda / tau1_hat * Phi2, upper sheet.
  cplx map_omega(const SideValue& sv) const;
  cplx map_omega(const SurfacePoint& pt) const;

 private:
  ModelParams p_;
  DerivedConstants d_;
  Phi2Solution phi2_;
};

struct ContourPoint {
  double xi;
  Side side;
  double x;
  double y;
};

struct InclusionContour {
  std::vector<ContourPoint> points;  // plus side, then minus side reversed
  double closure_error = 0.0;
  double min_abs_y = 0.0;
  double signed_area = 0.0;
  std::array<double, 2> centroid{0.0, 0.0};
  int half_plane_sign = 0;  // +1 or -1 when strictly embedded, 0 otherwise
  double diameter = 0.0;
  bool self_intersecting = false;
};

// Slit parameters of the contour samples, clustered toward 0 and 1.
std::vector<double> contour_abscissae(int n);

// Limit of omega at a slit endpoint (0 or 1) from one side, by polynomial
// extrapolation in s = sqrt(|xi - endpoint|).
cplx endpoint_limit(const Solution& sol, double endpoint, Side side);

InclusionContour trace_inclusion(const Solution& sol);
InclusionContour trace_inclusion(const ModelParams& p);

double polygon_area(const std::vector<ContourPoint>& pts);
double contour_diameter(const std::vector<ContourPoint>& pts);
bool has_self_intersection(const std::vector<ContourPoint>& pts);

struct BoundaryResidual {
  double max_re = 0.0;  // max |Re F - Re(tau1 omega)/lambda|
  double max_im = 0.0;  // max |Im F - b1|
  double scale = 0.0;   // max |F|
};

BoundaryResidual verify_boundary_condition(const InclusionContour& contour, const Solution& sol);

enum class SlotStatus { pass, fail, skipped, info };

struct DiagnosticSlot {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  SlotStatus status = SlotStatus::skipped;
};

struct DerivedSummary {
  double k = 0, K = 0, b1 = 0;
  cplx zeta1;
  Sheet sheet1 = Sheet::upper;
  int n_a = 0, n_b = 0;
  double X_inf = 0;
  std::array<double, 4> M{};
};

struct Diagnostics {
  ModelParams params;
  std::optional<DerivedSummary> derived;
  std::optional<InclusionContour> contour;
  std::vector<DiagnosticSlot> slots;
  std::vector<std::string> messages;
  bool validation_failed = false;
  bool solver_failed = false;
  bool embedded = false;  // contour strictly in one half-plane
  bool pass = false;

  const DiagnosticSlot* slot(const std::string& name) const;
};

// Names of every residual slot, in report order.
const std::vector<std::string>& diagnostic_slot_names();

Diagnostics run_diagnostics(const ModelParams& p);

// Richardson limit of f(eps) as eps -> 0+ from eps = 1e-4 and 1e-6.
template <class F>
cplx eps_limit(F&& f) {
  const double e1 = 1e-4, e2 = 1e-6;
  const cplx f1 = f(e1), f2 = f(e2);
  return f2 + (f2 - f1) * (e2 / (e1 - e2));
}

}  // namespace antiplane

// Command-line front end: single solves or parameter sweeps with CSV, JSON
// and SVG export.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "antiplane/io.hpp"

using namespace antiplane;

int main(int argc, char** argv) {
  CLI::App app{"Shapes of uniformly stressed inclusions in a half-plane under antiplane shear"};
  std::string config_path, zeta0, sweep;
  std::optional<double> m, kappa, tau1, tau1_inf, n0star, n1, b0, xi0, tol;
  std::optional<int> quad_order, points;
  RunConfig cfg;
  std::string out_contour, out_diag, out_svg;
  app.add_option("--config", config_path, "JSON file with ModelParams keys");
  app.add_option("--m", m, "right slit endpoint m > 1");
  app.add_option("--kappa", kappa, "shear modulus ratio mu1/mu0");
  app.add_option("--tau1", tau1, "tau1/mu0 inside the inclusion");
  app.add_option("--tau1-inf", tau1_inf, "remote stress tau1_inf/mu0");
  app.add_option("--n0star", n0star, "translation parameter N0*");
  app.add_option("--n1", n1, "scaling parameter N1");
  app.add_option("--b0", b0, "free constant b0");
  app.add_option("--xi0", xi0, "kernel pole xi0 < 0");
  app.add_option("--zeta0", zeta0, "factorization start point RE,IM");
  app.add_option("--quad-order", quad_order, "Chebyshev order");
  app.add_option("--points", points, "contour samples per slit side");
  app.add_option("--tol", tol, "diagnostic tolerance");
  app.add_option("--sweep", sweep, "name=v1,v2,... over m, kappa, tau1_hat, tau1_inf_hat, N0_star");
  app.add_option("--out-contour", out_contour, "contour CSV path");
  app.add_option("--out-diag", out_diag, "diagnostics JSON path");
  app.add_option("--out-svg", out_svg, "SVG plot path");
  app.add_flag("--quiet", cfg.quiet, "suppress the summary");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }

  try {
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) {
        std::cerr << "cannot read config '" << config_path << "'\n";
        return kExitIo;
      }
      std::stringstream ss;
      ss << f.rdbuf();
      apply_config_json(ss.str(), cfg);
    }
    ModelParams& p = cfg.params;
    if (m) p.m = *m;
    if (kappa) p.kappa = *kappa;
    if (tau1) p.tau1_hat = *tau1;
    if (tau1_inf) p.tau1_inf_hat = *tau1_inf;
    if (n0star) p.N0_star = *n0star;
    if (n1) p.N1 = *n1;
    if (b0) p.b0 = *b0;
    if (xi0) p.xi0 = *xi0;
    if (!zeta0.empty()) p.zeta0 = parse_complex(zeta0);
    if (quad_order) p.quad_order = *quad_order;
    if (points) p.n_points = *points;
    if (tol) p.tol = *tol;
    if (!sweep.empty()) parse_sweep(sweep, cfg);
    if (!out_contour.empty()) cfg.out_contour = out_contour;
    if (!out_diag.empty()) cfg.out_diag = out_diag;
    if (!out_svg.empty()) cfg.out_svg = out_svg;
  } catch (const ValidationError& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitValidation;
  }
  return run(cfg, std::cout, std::cerr);
}

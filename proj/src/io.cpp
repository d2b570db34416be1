#include "antiplane/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>

#include "json.hpp"

namespace antiplane {

using nlohmann::json;

const std::vector<std::string>& sweepable_parameters() {
  static const std::vector<std::string> names = {"m", "kappa", "tau1_hat", "tau1_inf_hat", "N0_star"};
  return names;
}

ModelParams with_parameter(ModelParams p, const std::string& name, double value) {
  if (name == "m") p.m = value;
  else if (name == "kappa") p.kappa = value;
  else if (name == "tau1_hat") p.tau1_hat = value;
  else if (name == "tau1_inf_hat") p.tau1_inf_hat = value;
  else if (name == "N0_star") p.N0_star = value;
  else throw ValidationError("cannot sweep parameter '" + name + "'");
  return p;
}

cplx parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ValidationError("expected RE,IM but got '" + text + "'");
  try {
    std::size_t n1 = 0, n2 = 0;
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    const double re = std::stod(a, &n1), im = std::stod(b, &n2);
    if (n1 != a.size() || n2 != b.size()) throw std::invalid_argument("trailing characters");
    return {re, im};
  } catch (const std::exception&) {
    throw ValidationError("expected RE,IM but got '" + text + "'");
  }
}

void parse_sweep(const std::string& text, RunConfig& cfg) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw ValidationError("sweep must look like name=v1,v2,...");
  const std::string name = text.substr(0, eq);
  const auto& allowed = sweepable_parameters();
  if (std::find(allowed.begin(), allowed.end(), name) == allowed.end())
    throw ValidationError("cannot sweep parameter '" + name + "'");
  std::vector<double> values;
  std::stringstream ss(text.substr(eq + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw ValidationError("bad sweep value '" + item + "'");
    }
  }
  if (values.empty()) throw ValidationError("sweep has no values");
  cfg.sweep_name = name;
  cfg.sweep_values = values;
}

void apply_config_json(const std::string& text, RunConfig& cfg) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("config must be a JSON object");
  ModelParams& p = cfg.params;
  auto num = [&](const json& v, const std::string& key) {
    if (!v.is_number()) throw ValidationError("config key '" + key + "' must be a number");
    return v.get<double>();
  };
  auto integer = [&](const json& v, const std::string& key) {
    if (!v.is_number_integer()) throw ValidationError("config key '" + key + "' must be an integer");
    return v.get<int>();
  };
  auto str = [&](const json& v, const std::string& key) {
    if (!v.is_string()) throw ValidationError("config key '" + key + "' must be a string");
    return v.get<std::string>();
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const json& v = it.value();
    if (key == "kappa") p.kappa = num(v, key);
    else if (key == "tau1_hat") p.tau1_hat = num(v, key);
    else if (key == "tau1_inf_hat") p.tau1_inf_hat = num(v, key);
    else if (key == "m") p.m = num(v, key);
    else if (key == "N0_star") p.N0_star = num(v, key);
    else if (key == "N1") p.N1 = num(v, key);
    else if (key == "b0") p.b0 = num(v, key);
    else if (key == "xi0") p.xi0 = num(v, key);
    else if (key == "zeta0") {
      if (!v.is_array() || v.size() != 2) throw ValidationError("config key 'zeta0' must be [re, im]");
      p.zeta0 = {num(v[0], key), num(v[1], key)};
    } else if (key == "quad_order") p.quad_order = integer(v, key);
    else if (key == "n_points") p.n_points = integer(v, key);
    else if (key == "tol") p.tol = num(v, key);
    else if (key == "out_contour") cfg.out_contour = str(v, key);
    else if (key == "out_diag") cfg.out_diag = str(v, key);
    else if (key == "out_svg") cfg.out_svg = str(v, key);
    else if (key == "sweep") parse_sweep(str(v, key), cfg);
    else throw ValidationError("unknown config key '" + key + "'");
  }
}

std::string leg_path(const std::string& path, const std::string& name, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "_%s_%g", name.c_str(), value);
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + buf;
  return path.substr(0, dot) + buf + path.substr(dot);
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  return f;
}

void finish(std::ofstream& f, const std::string& path) {
  f.flush();
  if (!f) throw IoError("write to '" + path + "' failed");
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

const char* status_name(SlotStatus s) {
  switch (s) {
    case SlotStatus::pass: return "pass";
    case SlotStatus::fail: return "fail";
    case SlotStatus::info: return "info";
    case SlotStatus::skipped: break;
  }
  return "skipped";
}

}  // namespace

void write_contour_csv(const InclusionContour& c, const std::string& path) {
  std::ofstream f = open_out(path);
  f << "xi,side,x,y\n";
  for (const auto& q : c.points)
    f << fmt17(q.xi) << ',' << (q.side == Side::plus ? '+' : '-') << ',' << fmt17(q.x) << ','
      << fmt17(q.y) << '\n';
  finish(f, path);
}

std::vector<ContourPoint> read_contour_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(f, line) || line != "xi,side,x,y") throw IoError("'" + path + "' has no contour header");
  std::vector<ContourPoint> pts;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string xi, side, x, y;
    if (!std::getline(ss, xi, ',') || !std::getline(ss, side, ',') || !std::getline(ss, x, ',') ||
        !std::getline(ss, y) || (side != "+" && side != "-"))
      throw IoError("malformed contour line '" + line + "'");
    pts.push_back({std::strtod(xi.c_str(), nullptr), side == "+" ? Side::plus : Side::minus,
                   std::strtod(x.c_str(), nullptr), std::strtod(y.c_str(), nullptr)});
  }
  return pts;
}

std::string diagnostics_json(const Diagnostics& d) {
  const ModelParams& p = d.params;
  json j;
  j["params"] = {{"kappa", p.kappa},       {"tau1_hat", p.tau1_hat}, {"tau1_inf_hat", p.tau1_inf_hat},
                 {"m", p.m},               {"N0_star", p.N0_star},   {"N1", p.N1},
                 {"b0", p.b0},             {"xi0", p.xi0},           {"zeta0", {p.zeta0.real(), p.zeta0.imag()}},
                 {"quad_order", p.quad_order}, {"n_points", p.n_points}, {"tol", p.tol}};
  if (d.derived) {
    const DerivedSummary& s = *d.derived;
    j["derived"] = {{"k", s.k},
                    {"K", s.K},
                    {"b1", s.b1},
                    {"zeta1", {s.zeta1.real(), s.zeta1.imag()}},
                    {"sheet1", s.sheet1 == Sheet::upper ? "upper" : "lower"},
                    {"n_a", s.n_a},
                    {"n_b", s.n_b},
                    {"X_inf", s.X_inf},
                    {"M", {s.M[0], s.M[1], s.M[2], s.M[3]}}};
  } else {
    j["derived"] = nullptr;
  }
  json residuals = json::object(), thresholds = json::object(), status = json::object();
  for (const auto& s : d.slots) {
    residuals[s.name] = s.status == SlotStatus::skipped ? json(nullptr) : finite_or_null(s.value);
    thresholds[s.name] = s.status == SlotStatus::info ? json(nullptr) : finite_or_null(s.threshold);
    status[s.name] = status_name(s.status);
  }
  j["residuals"] = residuals;
  j["thresholds"] = thresholds;
  j["status"] = status;
  if (d.contour) {
    const InclusionContour& c = *d.contour;
    j["contour"] = {{"points", c.points.size()},
                    {"signed_area", c.signed_area},
                    {"centroid", {c.centroid[0], c.centroid[1]}},
                    {"diameter", c.diameter},
                    {"closure_error", c.closure_error},
                    {"min_abs_y", c.min_abs_y},
                    {"half_plane_sign", c.half_plane_sign},
                    {"self_intersecting", c.self_intersecting}};
  }
  j["messages"] = d.messages;
  j["pass"] = d.pass;
  return j.dump(2) + "\n";
}

void write_diagnostics_json(const Diagnostics& d, const std::string& path) {
  std::ofstream f = open_out(path);
  f << diagnostics_json(d);
  finish(f, path);
}

std::string contours_svg(const std::vector<const InclusionContour*>& contours) {
  double x0 = INFINITY, x1 = -INFINITY, y0 = 0.0, y1 = 0.0;  // the x-axis is always in view
  for (const auto* c : contours)
    for (const auto& q : c->points) {
      x0 = std::min(x0, q.x), x1 = std::max(x1, q.x);
      y0 = std::min(y0, q.y), y1 = std::max(y1, q.y);
    }
  if (!std::isfinite(x0)) x0 = -1.0, x1 = 1.0;
  const double span = std::max({x1 - x0, y1 - y0, 1e-12});
  const double pad = 0.1 * span;
  const double vx = x0 - pad, vy = -y1 - pad, vw = x1 - x0 + 2 * pad, vh = y1 - y0 + 2 * pad;
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt17(vx) << ' ' << fmt17(vy) << ' '
    << fmt17(vw) << ' ' << fmt17(vh) << "\">\n";
  s << "<line x1=\"" << fmt17(vx) << "\" y1=\"0\" x2=\"" << fmt17(vx + vw)
    << "\" y2=\"0\" stroke=\"black\" vector-effect=\"non-scaling-stroke\"/>\n";
  for (const auto* c : contours) {
    s << "<polyline fill=\"none\" stroke=\"black\" vector-effect=\"non-scaling-stroke\" points=\"";
    for (const auto& q : c->points) s << fmt17(q.x) << ',' << fmt17(-q.y) << ' ';
    if (!c->points.empty()) s << fmt17(c->points.front().x) << ',' << fmt17(-c->points.front().y);
    s << "\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

void write_svg(const std::vector<const InclusionContour*>& contours, const std::string& path) {
  std::ofstream f = open_out(path);
  f << contours_svg(contours);
  finish(f, path);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  struct Leg {
    ModelParams params;
    double value = 0.0;
  };
  std::vector<Leg> legs;
  if (cfg.sweep_name.empty()) {
    legs.push_back({cfg.params, 0.0});
  } else {
    for (double v : cfg.sweep_values) legs.push_back({with_parameter(cfg.params, cfg.sweep_name, v), v});
  }
  bool invalid = false;
  for (const Leg& leg : legs) {
    const ValidationReport rep = validate(leg.params);
    if (!rep.ok()) {
      err << "invalid parameters: " << rep.summary() << '\n';
      invalid = true;
    }
  }
  if (invalid) return kExitValidation;

  std::vector<std::future<Diagnostics>> jobs;
  for (const Leg& leg : legs)
    jobs.push_back(std::async(std::launch::async, [p = leg.params] { return run_diagnostics(p); }));
  std::vector<Diagnostics> results;
  for (auto& j : jobs) results.push_back(j.get());

  const bool sweep = !cfg.sweep_name.empty();
  int code = kExitPass;
  try {
    std::vector<const InclusionContour*> drawn;
    for (std::size_t i = 0; i < legs.size(); ++i) {
      const Diagnostics& d = results[i];
      auto path_for = [&](const std::string& base) {
        return sweep ? leg_path(base, cfg.sweep_name, legs[i].value) : base;
      };
      if (!cfg.out_contour.empty() && d.contour) write_contour_csv(*d.contour, path_for(cfg.out_contour));
      if (!cfg.out_diag.empty()) write_diagnostics_json(d, path_for(cfg.out_diag));
      if (d.contour) drawn.push_back(&*d.contour);
    }
    if (!cfg.out_svg.empty()) write_svg(drawn, cfg.out_svg);
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  }

  for (std::size_t i = 0; i < legs.size(); ++i) {
    const Diagnostics& d = results[i];
    for (const auto& msg : d.messages) err << msg << '\n';
    if (d.solver_failed) code = std::max(code, kExitSolver);
    else if (!d.pass && code == kExitPass) code = kExitDiagnosticsFailed;
    if (cfg.quiet) continue;
    std::ostringstream line;
    if (sweep) line << cfg.sweep_name << '=' << legs[i].value << "  ";
    line << (d.pass ? "pass" : "FAIL");
    if (d.contour) {
      const InclusionContour& c = *d.contour;
      line << "  area=" << c.signed_area << "  diameter=" << c.diameter << "  min|y|=" << c.min_abs_y
           << "  half_plane=" << c.half_plane_sign;
    }
    for (const auto& s : d.slots)
      if (s.status == SlotStatus::fail) line << "  " << s.name << '=' << s.value;
    out << line.str() << '\n';
  }
  return code;
}

}  // namespace antiplane

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "antiplane/shape.hpp"

namespace antiplane {

class IoError : public Error {
 public:
  using Error::Error;
};

// Parameters that may be swept from the command line.
const std::vector<std::string>& sweepable_parameters();
ModelParams with_parameter(ModelParams p, const std::string& name, double value);

struct RunConfig {
  ModelParams params;
  std::string out_contour;
  std::string out_diag;
  std::string out_svg;
  std::string sweep_name;
  std::vector<double> sweep_values;
  bool quiet = false;
};

// Flat JSON object with ModelParams field names and optional output keys
// (out_contour, out_diag, out_svg, sweep = "name=v1,v2,..."). Throws
// ValidationError on unknown keys or wrong types.
void apply_config_json(const std::string& text, RunConfig& cfg);
// "name=v1,v2,..." into cfg.sweep_name / cfg.sweep_values.
void parse_sweep(const std::string& text, RunConfig& cfg);
// "re,im".
cplx parse_complex(const std::string& text);

// path with "_<name>_<value>" inserted before the extension.
std::string leg_path(const std::string& path, const std::string& name, double value);

void write_contour_csv(const InclusionContour& c, const std::string& path);
std::vector<ContourPoint> read_contour_csv(const std::string& path);

std::string diagnostics_json(const Diagnostics& d);
void write_diagnostics_json(const Diagnostics& d, const std::string& path);

std::string contours_svg(const std::vector<const InclusionContour*>& contours);
void write_svg(const std::vector<const InclusionContour*>& contours, const std::string& path);

// Exit codes of run().
inline constexpr int kExitPass = 0;
inline constexpr int kExitDiagnosticsFailed = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitSolver = 3;
inline constexpr int kExitIo = 4;

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace antiplane

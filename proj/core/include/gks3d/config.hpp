#pragma once

#include <stdexcept>
#include <string>

#include "gks3d/cases.hpp"
#include "gks3d/reconstruction.hpp"

namespace gks {

struct ConfigError : std::runtime_error {
  int line;
  ConfigError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

/// One run of the solver: case selection, grid/scheme overrides, output
/// cadence. Unset numeric overrides are negative (case defaults apply).
struct RunConfig {
  std::string case_id;
  CaseParams params;

  int nx = 0, ny = 0, nz = 0;  // 0: case default resolution
  double cfl = 0.4;
  double t_end = -1.0;  // < 0: case default

  ReconMode mode = ReconMode::weno5_js;
  bool mode_set = false;
  Projection projection = Projection::component;
  bool projection_set = false;
  double weno_epsilon = 1e-6;
  bool positivity_fallback = true;

  std::string output_dir = "out";
  int diag_every = 10;          // diagnostics cadence in steps
  double field_interval = 0.0;  // simulated-time interval for field dumps, 0 = off
  int checkpoint_every = 0;     // steps, 0 = off
  std::string restart_from;

  int threads = 0;  // 0: environment default
};

/// Parses `key = value` text with optional [section] headers (sections are
/// organizational; key names are globally unique). Unknown keys and
/// out-of-range values are errors carrying the line number.
RunConfig parse_config(const std::string& text);

RunConfig load_config_file(const std::string& path);

}  // namespace gks

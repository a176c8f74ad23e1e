#pragma once

#include <iosfwd>

#include "gks3d/config.hpp"

namespace gks {

/// Grid for a case honoring the config's resolution overrides.
GridSpec case_grid(const RunConfig& cfg);

/// Builds the initial problem for a validated RunConfig.
CaseSetup build_case(const RunConfig& cfg);

ReconConfig recon_config(const RunConfig& cfg);

/// End-to-end run loop: init (or restart), step to t_end, cadenced
/// diagnostics/field/checkpoint output, final summary. Returns the process
/// exit status.
int run(const RunConfig& cfg, std::ostream& log);

}  // namespace gks

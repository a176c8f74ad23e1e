#pragma once

#include <cstdint>
#include <vector>

#include "gks3d/integrator.hpp"

namespace gks {

/// Physical knobs of the built-in benchmark initializers. Each case reads the
/// subset it understands; unread fields are ignored.
struct CaseParams {
  double gamma = 1.4;
  double prandtl = 1.0;
  // Taylor-Green
  double reynolds = 280.0;
  double mach = 0.1;  // V0 / c0
  // lid-driven cavity
  double lid_mach = 0.15;
  double wall_temperature = 1.0;
  // Rayleigh-Taylor
  double atwood = 1.0 / 3.0;
  double interface_pressure = 2.4;
  double gravity_z = -0.1;
  double ramp_cells = 2.0;      // interface smoothing width in cells
  double perturb_amp = 0.05;    // h(x,y)/W amplitude; 0 gives a flat interface
  // isotropic turbulence
  double hit_a0 = 1.3e-4;
  double hit_k0 = 8.0;
  double hit_re_lambda = 72.0;
  double hit_ma_t = 0.5;
  std::uint64_t seed = 0;
};

/// A ready-to-run problem: field plus the solver configuration it needs.
struct CaseSetup {
  Field3D field;
  GasModel gas;
  BoundarySpec bc;
  Vec3 gravity{0.0, 0.0, 0.0};
  double t_end = 1.0;   // default end time of the benchmark
  double t_unit = 1.0;  // reporting time unit (t_c, eddy turnover, ...)

  explicit CaseSetup(const GridSpec& g) : field(g) {}

  SolverConfig solver(const ReconConfig& recon, double cfl = 0.4) const {
    return SolverConfig{gas, recon, bc, gravity, cfl};
  }
};

/// Spherical Sod problem on [0,1]^3: (1,0,1) inside r < 0.5, (0.125,0,0.1)
/// outside, sharp indicator averaged by 3x3x3 sub-sampling.
CaseSetup init_sod3d(const GridSpec& grid);

CaseSetup init_rayleigh_taylor(const GridSpec& grid, const CaseParams& p);
CaseSetup init_cavity(const GridSpec& grid, const CaseParams& p);
CaseSetup init_tgv(const GridSpec& grid, const CaseParams& p);
CaseSetup init_hit(const GridSpec& grid, const CaseParams& p);

struct RadialProfile {
  std::vector<double> r, rho, u, p;
  double time = 0.0;
};

/// 1D radial reference for the spherical Sod problem: same flux and two-stage
/// update in one dimension with the geometric source -(d-1)/r * (rho U,
/// rho U^2, U(rho E + p)). d = 1 reduces to the plane shock tube.
RadialProfile reference_sod_spherical(int n_cells, double t_end, int dim = 3);

/// Targets the initializer aims for; exposed for tests.
double hit_target_k0(const CaseParams& p);     // volume-averaged kinetic energy
double hit_eddy_turnover(const CaseParams& p);

}  // namespace gks

#pragma once

#include <vector>

#include "gks3d/flux.hpp"
#include "gks3d/grid.hpp"

namespace gks {

struct SolverConfig {
  GasModel gas;
  ReconConfig recon;
  BoundarySpec bc;
  Vec3 gravity{0.0, 0.0, 0.0};
  double cfl = 0.4;
};

/// L(Q) and its time derivative over the interior cells (x-fastest, no ghosts).
struct SpatialOperator {
  std::vector<Vec5> L, Lt;
  long fallbacks = 0;
};

struct StepStats {
  double dt = 0.0;
  double rho_min = 0.0, rho_max = 0.0;
  double p_min = 0.0, p_max = 0.0;
  long fallbacks = 0;
  double seconds = 0.0;
};

/// CFL time step: dt = cfl * min_cells [ sum_a (|U_a|+c)/d_a + 2 nu sum_a d_a^-2 ]^-1.
double compute_dt(const Field3D& q, const SolverConfig& cfg);

/// Flux divergence plus sources and their time derivatives. Ghosts of q must
/// be filled. `dt` is the step the linear-in-time face flux is built for.
void spatial_operator(const Field3D& q, double dt, const SolverConfig& cfg,
                      SpatialOperator& op);

/// Q* = Qn + dt/2 L + dt^2/8 dL/dt.
void stage_mid(const Field3D& qn, const SpatialOperator& op, double dt, Field3D& qmid);

/// Qn+1 = Qn + dt L(Qn) + dt^2/6 (dL/dt(Qn) + 2 dL/dt(Q*)).
void stage_final(const Field3D& qn, const SpatialOperator& op_n, const SpatialOperator& op_mid,
                 double dt, Field3D& out);

/// One full two-stage step, in place. dt_fixed > 0 overrides the CFL step.
StepStats step(Field3D& q, const SolverConfig& cfg, double dt_fixed = -1.0);

}  // namespace gks

#pragma once

#include <utility>
#include <vector>

#include "gks3d/grid.hpp"

namespace gks {

struct DiagnosticsRecord {
  double time = 0.0;
  double e_k = 0.0;      // volume-averaged kinetic energy / rho0
  double rho_rms = 0.0;
  double s_u = 0.0;      // velocity-derivative skewness
  double rho_min = 0.0, rho_max = 0.0;
  double p_min = 0.0, p_max = 0.0;
};

/// <rho |u|^2 / 2> / rho0, deterministic fixed-order sum.
double kinetic_energy(const Field3D& f, double rho0 = 1.0);

/// -dE_k/dt by centered differences on the sample times (one-sided ends).
/// Needs at least 3 samples.
std::vector<std::pair<double, double>> dissipation_rate(
    const std::vector<std::pair<double, double>>& ek);

double density_rms(const Field3D& f);

/// sum_i <(d_i u_i)^3> / <(d_i u_i)^2>^{3/2} with 4th-order central
/// differences; `averaged` divides by 3 (the conventional normalization).
/// Ghosts must be filled.
double skewness(const Field3D& f, bool averaged = false);

/// Q = (|Omega|^2 - |S|^2)/2 from the velocity-gradient split, plus |u| for
/// coloring; interior cells, ghosts must be filled.
struct QField {
  std::vector<double> q, vel_mag;  // interior cells, x-fastest
};
QField q_criterion(const Field3D& f);

struct CutRow {
  double coord, rho, u, p;  // u = velocity component along the cut axis
};

/// Samples along `axis` through the cells nearest to the two fixed
/// coordinates (given in the order of the remaining axes).
std::vector<CutRow> line_cut(const Field3D& f, const GasModel& m, int axis, double c1,
                             double c2);

}  // namespace gks

#pragma once

#include "gks3d/state.hpp"

namespace gks {

/// Closed-form moments of the normalized Maxwellian of one interface state,
/// in the face-local frame (u = normal velocity). Half moments split the
/// normal axis at u = 0.
struct MomentSet {
  double u[7];        // <u^n>
  double up[7];       // <u^n>_{u>0}
  double um[7];       // <u^n>_{u<0}
  double v[7], w[7];  // tangential full moments
  double xi[3];       // <xi^0>, <xi^2>, <xi^4>
};

enum class Range { full, positive, negative };

/// All moments up to order 6 for a state whose velocity is already expressed
/// in the face-local frame.
MomentSet compute_moments(const PrimitiveState& local, const GasModel& m);

/// Spec-level accessors (n <= 6).
double full_moment(const MomentSet& ms, int axis_local, int n);
double half_moment(const MomentSet& ms, int sign, int n);

/// Coefficients of a = c1 + c2 u + c3 v + c4 w + c5 (u^2+v^2+w^2+xi^2)/2.
struct MicroSlope {
  double c[5];
};

/// Solves rho * <a psi> = b for the expansion coefficients (closed form).
MicroSlope solve_micro_slope(const PrimitiveState& local, const Vec5& b, const GasModel& m);

/// Same solve through the explicit 5x5 moment matrix; used as an oracle for
/// the closed-form elimination.
MicroSlope solve_micro_slope_generic(const PrimitiveState& local, const Vec5& b, const GasModel& m);

/// <u^i v^j w^k xi^(2x)> with the chosen u-range.
double moment_mono(const MomentSet& ms, Range r, int i, int j, int k, int x);

/// <psi u^p v^q w^r> (5-vector), normalized Maxwellian.
Vec5 moment_psi(const MomentSet& ms, Range r, int p, int q, int s);

/// <a psi u^p v^q w^r> (5-vector).
Vec5 moment_psi(const MomentSet& ms, Range r, const MicroSlope& a, int p, int q, int s);

}  // namespace gks

#pragma once

#include "gks3d/moments.hpp"
#include "gks3d/reconstruction.hpp"

namespace gks {

/// Physical and numerical collision times. tau enters the Chapman-Enskog
/// (viscous) terms, tau_num the exponential relaxation.
struct TauPair {
  double tau, tau_num;
};

TauPair collision_time(const GasModel& m, double p_left, double p_right,
                       const PrimitiveState& center, double dt);

/// Equilibrium state at the interface from the compatibility condition:
/// W0 = rho_l <psi>_{u>0} + rho_r <psi>_{u<0}.
PrimitiveState interface_equilibrium(const PrimitiveState& left, const PrimitiveState& right,
                                     const GasModel& m);

/// The six term groups of the interface distribution, fully contracted; a
/// time integral is then just a linear combination with its TimeCoefs.
struct TermSet {
  Vec5 g0{}, abar{}, Abar{};  // equilibrium value / spatial slopes / time slope
  Vec5 lr{}, alr{}, Alr{};    // initial half Maxwellians, combined l + r
};

/// Everything the time-dependent flux needs at one Gauss point, precomputed
/// once and contracted for any number of time coefficients.
struct GaussFlux {
  PrimitiveState pl, pr, p0;  // face-local frame
  MomentSet ml, mr, m0;
  MicroSlope al[3], ar[3], a0[3];
  MicroSlope Al, Ar, A0;
  TauPair tau;
  TermSet flux_terms;   // <u psi .> contractions
  TermSet state_terms;  // <psi .> contractions (only when the Prandtl fix is on)
  bool has_state = false;
};

/// Micro-slope solves and the compatibility closures for one reconstructed
/// Gauss point. Throws PositivityError if a side state or the equilibrium
/// state loses positivity.
GaussFlux assemble_interface(const GaussPointRecon& r, const GasModel& m, double dt);

/// Time prefactors of the five term groups of the interface distribution.
struct TimeCoefs {
  double g0;    // equilibrium
  double abar;  // equilibrium spatial slopes
  double Abar;  // equilibrium time slope
  double lr;    // initial half Maxwellians
  double alr;   // initial spatial slopes
  double Alr;   // initial time slopes
};

TimeCoefs instant_coefs(double t, const TauPair& tau);
TimeCoefs integrated_coefs(double delta, const TauPair& tau);

struct FluxResult {
  Vec5 flux;   // <u psi f>
  Vec5 state;  // <psi f>, needed for the heat-flux extraction
};

FluxResult eval_flux(const GaussFlux& g, const TimeCoefs& c, bool with_state);

/// Peculiar-velocity heat flux of the (time-integrated) distribution.
double heat_flux(const FluxResult& r, const Vec3& ubar);

Vec5 instantaneous_flux(const GaussFlux& g, double t);
Vec5 time_integrated_flux(const GaussFlux& g, double delta);

/// Energy-flux adjustment fixing the Prandtl number; mass and momentum are
/// untouched.
Vec5 prandtl_correction(const Vec5& flux, double q, double prandtl);

struct FaceFluxPair {
  Vec5 full;  // integral over [0, dt], times face area
  Vec5 half;  // integral over [0, dt/2]
};

/// Gauss-quadrature aggregation (weights 1/4) of the four assembled points of
/// one face, including the Prandtl fix when the gas is viscous.
FaceFluxPair face_flux_integrals(const GaussFlux pts[4], const GasModel& m, double dt,
                                 double area);

/// Linear-in-time flux coefficients F(t) ~ F0 + F1 (t - t_n).
void flux_time_coefficients(const FaceFluxPair& pair, double dt, Vec5& f0, Vec5& f1);

}  // namespace gks

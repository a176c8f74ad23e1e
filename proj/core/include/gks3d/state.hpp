#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gks {

using Vec3 = std::array<double, 3>;
using Vec5 = std::array<double, 5>;

inline Vec5& operator+=(Vec5& a, const Vec5& b) {
  for (int i = 0; i < 5; ++i) a[i] += b[i];
  return a;
}
inline Vec5 operator+(Vec5 a, const Vec5& b) { return a += b; }
inline Vec5 operator-(const Vec5& a, const Vec5& b) {
  Vec5 r;
  for (int i = 0; i < 5; ++i) r[i] = a[i] - b[i];
  return r;
}
inline Vec5 operator*(double s, const Vec5& a) {
  Vec5 r;
  for (int i = 0; i < 5; ++i) r[i] = s * a[i];
  return r;
}

struct InvalidStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a reconstructed or updated state loses positivity and no
/// fallback is allowed to absorb it.
struct PositivityError : InvalidStateError {
  using InvalidStateError::InvalidStateError;
};

enum class ViscosityModel { inviscid, constant, power_law };

struct GasModel {
  double gamma = 1.4;
  double K = 3.0;  // internal degrees of freedom, (5-3*gamma)/(gamma-1)
  double prandtl = 1.0;
  ViscosityModel viscosity_model = ViscosityModel::inviscid;
  double mu0 = 0.0;
  double T0 = 1.0;             // reference temperature of the power law
  double visc_exponent = 0.76;
  double tau_eps = 0.01;  // epsilon in the inviscid collision-time model
  double tau_C = 1.0;     // pressure-jump coefficient

  static double internal_dof(double gamma) { return (5.0 - 3.0 * gamma) / (gamma - 1.0); }

  static GasModel inviscid(double gamma) {
    GasModel m;
    m.gamma = gamma;
    m.K = internal_dof(gamma);
    return m;
  }
  static GasModel constant_mu(double gamma, double mu, double prandtl = 1.0) {
    GasModel m = inviscid(gamma);
    m.viscosity_model = ViscosityModel::constant;
    m.mu0 = mu;
    m.prandtl = prandtl;
    return m;
  }
  static GasModel power_law(double gamma, double mu0, double T0, double exponent,
                            double prandtl = 1.0) {
    GasModel m = inviscid(gamma);
    m.viscosity_model = ViscosityModel::power_law;
    m.mu0 = mu0;
    m.T0 = T0;
    m.visc_exponent = exponent;
    m.prandtl = prandtl;
    return m;
  }

  bool viscous() const { return viscosity_model != ViscosityModel::inviscid; }

  double viscosity(double T) const {
    switch (viscosity_model) {
      case ViscosityModel::inviscid: return 0.0;
      case ViscosityModel::constant: return mu0;
      case ViscosityModel::power_law: return mu0 * std::pow(T / T0, visc_exponent);
    }
    return 0.0;
  }
};

struct ConservedState {
  double rho = 1.0;
  Vec3 mom{};
  double rhoE = 1.0;

  Vec5 vec() const { return {rho, mom[0], mom[1], mom[2], rhoE}; }
  static ConservedState from_vec(const Vec5& v) { return {v[0], {v[1], v[2], v[3]}, v[4]}; }
};

/// (rho, U, V, W, lambda) with lambda = rho/(2p); the Maxwellian parameter.
struct PrimitiveState {
  double rho = 1.0;
  Vec3 vel{};
  double lam = 1.0;
};

inline double pressure(const PrimitiveState& p) { return p.rho / (2.0 * p.lam); }
inline double temperature(const PrimitiveState& p) { return 1.0 / (2.0 * p.lam); }  // R = 1
inline double sound_speed(const PrimitiveState& p, const GasModel& m) {
  return std::sqrt(m.gamma / (2.0 * p.lam));
}

PrimitiveState prim_from_cons(const ConservedState& q, const GasModel& m);
ConservedState cons_from_prim(const PrimitiveState& p, const GasModel& m);

/// Non-throwing validity check (positive density and internal energy).
bool valid_state(const ConservedState& q);

Vec5 euler_flux(const PrimitiveState& p, int axis, const GasModel& m);

/// Cyclic permutation mapping a global 5-vector into the face-local frame of
/// `axis` (normal first), and back.
Vec5 to_face_frame(const Vec5& q, int axis);
Vec5 from_face_frame(const Vec5& q, int axis);
PrimitiveState prim_to_face_frame(const PrimitiveState& p, int axis);

struct EigenBasis {
  // project = left * Q (characteristic variables), recover = right * w
  double left[5][5];
  double right[5][5];

  Vec5 project(const Vec5& q) const;
  Vec5 recover(const Vec5& w) const;
};

/// Characteristic decomposition of the Euler flux Jacobian along `axis`,
/// evaluated at q_star. Wave speeds are {U-c, U, U, U, U+c} in the local frame.
EigenBasis eigen_decomposition(const ConservedState& q_star, int axis, const GasModel& m);

}  // namespace gks

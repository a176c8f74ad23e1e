#include "gks3d/state.hpp"

namespace gks {

PrimitiveState prim_from_cons(const ConservedState& q, const GasModel& m) {
  if (!(q.rho > 0.0)) throw InvalidStateError("non-positive density " + std::to_string(q.rho));
  const double inv_rho = 1.0 / q.rho;
  const double ke = 0.5 * (q.mom[0] * q.mom[0] + q.mom[1] * q.mom[1] + q.mom[2] * q.mom[2]) * inv_rho;
  const double ei = q.rhoE - ke;
  if (!(ei > 0.0)) throw InvalidStateError("non-positive internal energy " + std::to_string(ei));
  PrimitiveState p;
  p.rho = q.rho;
  p.vel = {q.mom[0] * inv_rho, q.mom[1] * inv_rho, q.mom[2] * inv_rho};
  p.lam = (m.K + 3.0) * q.rho / (4.0 * ei);
  return p;
}

ConservedState cons_from_prim(const PrimitiveState& p, const GasModel& m) {
  ConservedState q;
  q.rho = p.rho;
  q.mom = {p.rho * p.vel[0], p.rho * p.vel[1], p.rho * p.vel[2]};
  const double ke = 0.5 * p.rho * (p.vel[0] * p.vel[0] + p.vel[1] * p.vel[1] + p.vel[2] * p.vel[2]);
  q.rhoE = ke + (m.K + 3.0) * p.rho / (4.0 * p.lam);
  return q;
}

bool valid_state(const ConservedState& q) {
  if (!(q.rho > 0.0) || !std::isfinite(q.rho)) return false;
  const double ke = 0.5 * (q.mom[0] * q.mom[0] + q.mom[1] * q.mom[1] + q.mom[2] * q.mom[2]) / q.rho;
  return q.rhoE - ke > 0.0 && std::isfinite(q.rhoE);
}

Vec5 euler_flux(const PrimitiveState& p, int axis, const GasModel& m) {
  const double pr = pressure(p);
  const double un = p.vel[axis];
  const ConservedState q = cons_from_prim(p, m);
  Vec5 f;
  f[0] = q.rho * un;
  f[1] = q.mom[0] * un;
  f[2] = q.mom[1] * un;
  f[3] = q.mom[2] * un;
  f[1 + axis] += pr;
  f[4] = un * (q.rhoE + pr);
  return f;
}

Vec5 to_face_frame(const Vec5& q, int axis) {
  return {q[0], q[1 + axis], q[1 + (axis + 1) % 3], q[1 + (axis + 2) % 3], q[4]};
}

Vec5 from_face_frame(const Vec5& q, int axis) {
  Vec5 r;
  r[0] = q[0];
  r[4] = q[4];
  r[1 + axis] = q[1];
  r[1 + (axis + 1) % 3] = q[2];
  r[1 + (axis + 2) % 3] = q[3];
  return r;
}

PrimitiveState prim_to_face_frame(const PrimitiveState& p, int axis) {
  PrimitiveState r = p;
  r.vel = {p.vel[axis], p.vel[(axis + 1) % 3], p.vel[(axis + 2) % 3]};
  return r;
}

Vec5 EigenBasis::project(const Vec5& q) const {
  Vec5 w{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) w[i] += left[i][j] * q[j];
  return w;
}

Vec5 EigenBasis::recover(const Vec5& w) const {
  Vec5 q{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) q[i] += right[i][j] * w[j];
  return q;
}

EigenBasis eigen_decomposition(const ConservedState& q_star, int axis, const GasModel& m) {
  const PrimitiveState p = prim_from_cons(q_star, m);
  const PrimitiveState pl = prim_to_face_frame(p, axis);
  const double u = pl.vel[0], v = pl.vel[1], w = pl.vel[2];
  const double c = sound_speed(p, m);
  const double q2 = u * u + v * v + w * w;
  const double pr = pressure(p);
  const double H = (cons_from_prim(p, m).rhoE + pr) / p.rho;
  const double g1 = m.gamma - 1.0;
  const double b1 = g1 / (c * c);

  EigenBasis e;
  const double R[5][5] = {
      {1, 1, 0, 0, 1},
      {u - c, u, 0, 0, u + c},
      {v, v, 1, 0, v},
      {w, w, 0, 1, w},
      {H - u * c, 0.5 * q2, v, w, H + u * c},
  };
  const double L[5][5] = {
      {0.5 * (0.5 * b1 * q2 + u / c), -0.5 * (b1 * u + 1.0 / c), -0.5 * b1 * v, -0.5 * b1 * w, 0.5 * b1},
      {1.0 - 0.5 * b1 * q2, b1 * u, b1 * v, b1 * w, -b1},
      {-v, 0, 1, 0, 0},
      {-w, 0, 0, 1, 0},
      {0.5 * (0.5 * b1 * q2 - u / c), -0.5 * (b1 * u - 1.0 / c), -0.5 * b1 * v, -0.5 * b1 * w, 0.5 * b1},
  };
  // compose with the frame permutation so callers work on global vectors
  for (int i = 0; i < 5; ++i) {
    Vec5 row = {L[i][0], L[i][1], L[i][2], L[i][3], L[i][4]};
    // left acts on local vectors: left_global = L * P, i.e. permute columns
    Vec5 col_map = row;
    Vec5 g{};
    g[0] = col_map[0];
    g[4] = col_map[4];
    g[1 + axis] = col_map[1];
    g[1 + (axis + 1) % 3] = col_map[2];
    g[1 + (axis + 2) % 3] = col_map[3];
    for (int j = 0; j < 5; ++j) e.left[i][j] = g[j];
  }
  for (int j = 0; j < 5; ++j) {
    Vec5 col = {R[0][j], R[1][j], R[2][j], R[3][j], R[4][j]};
    Vec5 g = from_face_frame(col, axis);
    for (int i = 0; i < 5; ++i) e.right[i][j] = g[i];
  }
  return e;
}

}  // namespace gks

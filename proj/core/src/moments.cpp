#include "gks3d/moments.hpp"

namespace gks {

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

MomentSet compute_moments(const PrimitiveState& local, const GasModel& m) {
  MomentSet ms;
  const double lam = local.lam;
  const double inv2lam = 0.5 / lam;
  const double u = local.vel[0], v = local.vel[1], w = local.vel[2];

  ms.u[0] = 1.0;
  ms.u[1] = u;
  ms.v[0] = 1.0;
  ms.v[1] = v;
  ms.w[0] = 1.0;
  ms.w[1] = w;
  const double sl = std::sqrt(lam);
  ms.up[0] = 0.5 * std::erfc(-sl * u);
  ms.up[1] = u * ms.up[0] + 0.5 * std::exp(-lam * u * u) / (kSqrtPi * sl);
  ms.um[0] = ms.u[0] - ms.up[0];
  ms.um[1] = ms.u[1] - ms.up[1];
  for (int n = 2; n < 7; ++n) {
    const double c = (n - 1) * inv2lam;
    ms.u[n] = u * ms.u[n - 1] + c * ms.u[n - 2];
    ms.v[n] = v * ms.v[n - 1] + c * ms.v[n - 2];
    ms.w[n] = w * ms.w[n - 1] + c * ms.w[n - 2];
    ms.up[n] = u * ms.up[n - 1] + c * ms.up[n - 2];
    ms.um[n] = ms.u[n] - ms.up[n];
  }
  ms.xi[0] = 1.0;
  ms.xi[1] = m.K * inv2lam;
  ms.xi[2] = (m.K * m.K + 2.0 * m.K) * inv2lam * inv2lam;
  return ms;
}

double full_moment(const MomentSet& ms, int axis_local, int n) {
  return axis_local == 0 ? ms.u[n] : (axis_local == 1 ? ms.v[n] : ms.w[n]);
}

double half_moment(const MomentSet& ms, int sign, int n) {
  return sign > 0 ? ms.up[n] : ms.um[n];
}

double moment_mono(const MomentSet& ms, Range r, int i, int j, int k, int x) {
  const double* mu = r == Range::full ? ms.u : (r == Range::positive ? ms.up : ms.um);
  return mu[i] * ms.v[j] * ms.w[k] * ms.xi[x];
}

namespace {

// <psi u^p v^q w^s xi^(2x)>
inline Vec5 psi_vec(const MomentSet& ms, Range r, int p, int q, int s, int x) {
  const double* mu = r == Range::full ? ms.u : (r == Range::positive ? ms.up : ms.um);
  const double base = ms.v[q] * ms.w[s] * ms.xi[x];
  Vec5 out;
  out[0] = mu[p] * base;
  out[1] = mu[p + 1] * base;
  out[2] = mu[p] * ms.v[q + 1] * ms.w[s] * ms.xi[x];
  out[3] = mu[p] * ms.v[q] * ms.w[s + 1] * ms.xi[x];
  out[4] = 0.5 * (mu[p + 2] * base + mu[p] * ms.v[q + 2] * ms.w[s] * ms.xi[x] +
                  mu[p] * ms.v[q] * ms.w[s + 2] * ms.xi[x] + mu[p] * ms.v[q] * ms.w[s] * ms.xi[x + 1]);
  return out;
}

}  // namespace

Vec5 moment_psi(const MomentSet& ms, Range r, int p, int q, int s) {
  return psi_vec(ms, r, p, q, s, 0);
}

Vec5 moment_psi(const MomentSet& ms, Range r, const MicroSlope& a, int p, int q, int s) {
  Vec5 out = a.c[0] * psi_vec(ms, r, p, q, s, 0);
  out += a.c[1] * psi_vec(ms, r, p + 1, q, s, 0);
  out += a.c[2] * psi_vec(ms, r, p, q + 1, s, 0);
  out += a.c[3] * psi_vec(ms, r, p, q, s + 1, 0);
  const double h = 0.5 * a.c[4];
  out += h * psi_vec(ms, r, p + 2, q, s, 0);
  out += h * psi_vec(ms, r, p, q + 2, s, 0);
  out += h * psi_vec(ms, r, p, q, s + 2, 0);
  out += h * psi_vec(ms, r, p, q, s, 1);
  return out;
}

MicroSlope solve_micro_slope(const PrimitiveState& local, const Vec5& b, const GasModel& m) {
  const double inv_rho = 1.0 / local.rho;
  const double u = local.vel[0], v = local.vel[1], w = local.vel[2];
  const double lam = local.lam;
  const double q2 = u * u + v * v + w * w;
  const double e = q2 + (m.K + 3.0) / (2.0 * lam);
  const double B0 = b[0] * inv_rho, B1 = b[1] * inv_rho, B2 = b[2] * inv_rho,
               B3 = b[3] * inv_rho, B4 = b[4] * inv_rho;
  // eliminate velocity rows, then the energy row
  const double R2 = B1 - u * B0;
  const double R3 = B2 - v * B0;
  const double R4 = B3 - w * B0;
  const double R5 = 2.0 * B4 - e * B0;
  MicroSlope a;
  a.c[4] = (R5 - 2.0 * (u * R2 + v * R3 + w * R4)) * 4.0 * lam * lam / (m.K + 3.0);
  a.c[1] = 2.0 * lam * R2 - u * a.c[4];
  a.c[2] = 2.0 * lam * R3 - v * a.c[4];
  a.c[3] = 2.0 * lam * R4 - w * a.c[4];
  a.c[0] = B0 - u * a.c[1] - v * a.c[2] - w * a.c[3] - 0.5 * e * a.c[4];
  return a;
}

MicroSlope solve_micro_slope_generic(const PrimitiveState& local, const Vec5& b, const GasModel& m) {
  const MomentSet ms = compute_moments(local, m);
  // M_ij = <psi_i psi_j>; unknowns are the expansion coefficients in the psi basis
  double M[5][6];
  for (int i = 0; i < 5; ++i) {
    MicroSlope unit{};
    unit.c[i] = 1.0;
    const Vec5 col = moment_psi(ms, Range::full, unit, 0, 0, 0);
    for (int j = 0; j < 5; ++j) M[j][i] = col[j];
  }
  for (int i = 0; i < 5; ++i) M[i][5] = b[i] / local.rho;
  // Gaussian elimination with partial pivoting
  for (int col = 0; col < 5; ++col) {
    int piv = col;
    for (int r = col + 1; r < 5; ++r)
      if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
    if (M[piv][col] == 0.0) throw InvalidStateError("singular moment matrix");
    if (piv != col)
      for (int j = 0; j < 6; ++j) std::swap(M[piv][j], M[col][j]);
    for (int r = 0; r < 5; ++r) {
      if (r == col) continue;
      const double f = M[r][col] / M[col][col];
      for (int j = col; j < 6; ++j) M[r][j] -= f * M[col][j];
    }
  }
  MicroSlope a;
  for (int i = 0; i < 5; ++i) a.c[i] = M[i][5] / M[i][i];
  return a;
}

}  // namespace gks

#include "gks3d/cases.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "gks3d/reconstruction.hpp"

namespace gks {

namespace {
constexpr double kPi = 3.14159265358979323846;

ConservedState make_state(double rho, const Vec3& vel, double p, const GasModel& m) {
  PrimitiveState pr;
  pr.rho = rho;
  pr.vel = vel;
  pr.lam = rho / (2.0 * p);
  return cons_from_prim(pr, m);
}
}  // namespace

CaseSetup init_sod3d(const GridSpec& grid) {
  CaseSetup s(grid);
  s.gas = GasModel::inviscid(1.4);
  for (int a = 0; a < 3; ++a) {
    s.bc.face[a][0].type = BcType::symmetry;
    s.bc.face[a][1].type = BcType::outflow;
  }
  s.t_end = 0.2;

  const ConservedState inner = make_state(1.0, {0, 0, 0}, 1.0, s.gas);
  const ConservedState outer = make_state(0.125, {0, 0, 0}, 0.1, s.gas);
  for (int k = 0; k < grid.nz; ++k)
    for (int j = 0; j < grid.ny; ++j)
      for (int i = 0; i < grid.nx; ++i) {
        // 3x3x3 sub-sampling of the sphere indicator
        int in = 0;
        for (int sk = 0; sk < 3; ++sk)
          for (int sj = 0; sj < 3; ++sj)
            for (int si = 0; si < 3; ++si) {
              const double x = grid.origin[0] + (i + (2 * si + 1) / 6.0) * grid.d(0);
              const double y = grid.origin[1] + (j + (2 * sj + 1) / 6.0) * grid.d(1);
              const double z = grid.origin[2] + (k + (2 * sk + 1) / 6.0) * grid.d(2);
              if (x * x + y * y + z * z < 0.25) ++in;
            }
        const double f = in / 27.0;
        const Vec5 mix = f * inner.vec() + (1.0 - f) * outer.vec();
        s.field(i, j, k) = ConservedState::from_vec(mix);
      }
  return s;
}

CaseSetup init_rayleigh_taylor(const GridSpec& grid, const CaseParams& p) {
  CaseSetup s(grid);
  s.gas = GasModel::inviscid(p.gamma);
  for (int a = 0; a < 3; ++a)
    for (int side = 0; side < 2; ++side) s.bc.face[a][side].type = BcType::symmetry;
  s.gravity = {0.0, 0.0, p.gravity_z};
  s.t_end = 5.0;

  const double w = grid.length[0];  // horizontal box width W
  const double rho_l = 1.0;
  const double rho_h = rho_l * (1.0 + p.atwood) / (1.0 - p.atwood);
  const double zi0 = grid.origin[2] + 0.5 * grid.length[2];
  const double ramp = p.ramp_cells * grid.d(2);

  // density profile across the perturbed interface (linear ramp of width `ramp`)
  const auto rho_at = [&](double x, double y, double z) {
    const double h = p.perturb_amp * w * (std::cos(2.0 * kPi * x / w) + std::cos(2.0 * kPi * y / w));
    const double f = std::clamp((z - (zi0 + h)) / ramp + 0.5, 0.0, 1.0);
    return rho_l + (rho_h - rho_l) * f;
  };

  const int sub = 16;  // hydrostatic column integration sub-steps per cell
  for (int j = 0; j < grid.ny; ++j)
    for (int i = 0; i < grid.nx; ++i) {
      const double x = grid.center(0, i), y = grid.center(1, j);
      // integrate dp/dz = rho g_z from the mean interface height per column
      const double dz = grid.d(2) / sub;
      std::vector<double> pcol(grid.nz);
      for (int k = 0; k < grid.nz; ++k) {
        const double zc = grid.center(2, k);
        double pz = p.interface_pressure;
        const double lo = std::min(zi0, zc), hi = std::max(zi0, zc);
        const int nsub = std::max(1, int(std::ceil((hi - lo) / dz)));
        const double step = (zc - zi0) / nsub;
        double z = zi0;
        for (int q = 0; q < nsub; ++q) {
          pz += rho_at(x, y, z + 0.5 * step) * p.gravity_z * step;
          z += step;
        }
        pcol[k] = pz;
      }
      for (int k = 0; k < grid.nz; ++k)
        s.field(i, j, k) =
            make_state(rho_at(x, y, grid.center(2, k)), {0, 0, 0}, pcol[k], s.gas);
    }
  return s;
}

CaseSetup init_cavity(const GridSpec& grid, const CaseParams& p) {
  CaseSetup s(grid);
  const double gamma = 5.0 / 3.0;
  const double t_wall = p.wall_temperature;
  const double c = std::sqrt(gamma * t_wall);
  const double u_lid = p.lid_mach * c;
  const double rho0 = 1.0;
  const double mu = rho0 * u_lid * 1.0 / p.reynolds;  // L = 1
  s.gas = GasModel::constant_mu(gamma, mu, p.prandtl);
  for (int a = 0; a < 3; ++a)
    for (int side = 0; side < 2; ++side) {
      s.bc.face[a][side].type = BcType::isothermal_wall;
      s.bc.face[a][side].wall_temperature = t_wall;
    }
  s.bc.face[2][1].wall_velocity = {u_lid, 0.0, 0.0};  // moving lid at z+
  s.t_end = 60.0;
  s.t_unit = 1.0 / u_lid;

  const ConservedState rest = make_state(rho0, {0, 0, 0}, rho0 * t_wall, s.gas);
  for (int k = 0; k < grid.nz; ++k)
    for (int j = 0; j < grid.ny; ++j)
      for (int i = 0; i < grid.nx; ++i) s.field(i, j, k) = rest;
  return s;
}

CaseSetup init_tgv(const GridSpec& grid, const CaseParams& p) {
  CaseSetup s(grid);
  const double v0 = 1.0, rho0 = 1.0, L = 1.0;
  const double c0 = v0 / p.mach;
  const double p0 = rho0 * c0 * c0 / p.gamma;
  const double t0 = p0 / rho0;  // uniform temperature
  s.gas = GasModel::constant_mu(p.gamma, rho0 * v0 * L / p.reynolds, p.prandtl);
  s.bc = BoundarySpec::all_periodic();
  s.t_unit = L / v0;
  s.t_end = 10.0 * s.t_unit;

  for (int k = 0; k < grid.nz; ++k)
    for (int j = 0; j < grid.ny; ++j)
      for (int i = 0; i < grid.nx; ++i) {
        const double x = grid.center(0, i) / L, y = grid.center(1, j) / L,
                     z = grid.center(2, k) / L;
        const double u = v0 * std::sin(x) * std::cos(y) * std::cos(z);
        const double v = -v0 * std::cos(x) * std::sin(y) * std::cos(z);
        const double pr = p0 + rho0 * v0 * v0 / 16.0 * (std::cos(2 * x) + std::cos(2 * y)) *
                                   (std::cos(2 * z) + 2.0);
        s.field(i, j, k) = make_state(pr / t0, {u, v, 0.0}, pr, s.gas);
      }
  return s;
}

double hit_target_k0(const CaseParams& p) {
  return 3.0 * p.hit_a0 / 64.0 * std::sqrt(2.0 * kPi) * std::pow(p.hit_k0, 5.0);
}

double hit_eddy_turnover(const CaseParams& p) {
  return 32.0 / p.hit_a0 * std::pow(2.0 * kPi, 0.25) * std::pow(p.hit_k0, -3.5);
}

CaseSetup init_hit(const GridSpec& grid, const CaseParams& p) {
  const int n = grid.nx;
  if (grid.ny != n || grid.nz != n || n % 2 != 0)
    throw InvalidStateError("isotropic turbulence needs an even cubic grid");
  if (n / 2 < 2 * p.hit_k0)
    throw InvalidStateError("grid too coarse: need max resolved wavenumber >= 2*k0");

  CaseSetup s(grid);
  const double k0 = hit_target_k0(p);
  const double t0 = 2.0 * k0 / (p.hit_ma_t * p.hit_ma_t * p.gamma);
  const double mu0 = std::pow(2.0 * kPi, 0.25) / 4.0 * std::sqrt(2.0 * p.hit_a0) *
                     std::pow(p.hit_k0, 1.5) / p.hit_re_lambda;
  s.gas = GasModel::power_law(p.gamma, mu0, t0, 0.76, p.prandtl);
  s.bc = BoundarySpec::all_periodic();
  s.t_unit = hit_eddy_turnover(p);
  s.t_end = s.t_unit;

  // Gaussian white noise per component, shaped spectrally: solenoidal
  // projection, then per-integer-shell rescaling onto E(k).
  const int nc = n / 2 + 1;
  const std::size_t nreal = std::size_t(n) * n * n;
  const std::size_t nspec = std::size_t(n) * n * nc;
  std::vector<double> vel[3];
  std::vector<std::complex<double>> spec[3];
  for (int c = 0; c < 3; ++c) {
    vel[c].resize(nreal);
    spec[c].resize(nspec);
    std::mt19937_64 rng(p.seed * 3 + c + 1);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (auto& v : vel[c]) v = gauss(rng);
    fftw_plan fwd = fftw_plan_dft_r2c_3d(n, n, n, vel[c].data(),
                                         reinterpret_cast<fftw_complex*>(spec[c].data()),
                                         FFTW_ESTIMATE);
    fftw_execute(fwd);
    fftw_destroy_plan(fwd);
  }

  const auto freq = [&](int i) { return i <= n / 2 ? i : i - n; };
  const int nshell = 3 * (n / 2) * (n / 2) + 1;
  std::vector<double> shell_energy(std::size_t(std::sqrt(nshell)) + 2, 0.0);

  for (int kz = 0; kz < n; ++kz)
    for (int ky = 0; ky < n; ++ky)
      for (int kx = 0; kx < nc; ++kx) {
        const std::size_t idx = (std::size_t(kz) * n + ky) * nc + kx;
        const double f[3] = {double(freq(kx)), double(freq(ky)), double(freq(kz))};
        const double k2 = f[0] * f[0] + f[1] * f[1] + f[2] * f[2];
        // drop the mean and the Nyquist planes: projecting a one-signed
        // Nyquist wavevector breaks Hermitian symmetry, so the c2r transform
        // would re-symmetrize it into a compressible residue
        if (k2 == 0.0 || std::abs(f[0]) == n / 2 || std::abs(f[1]) == n / 2 ||
            std::abs(f[2]) == n / 2) {
          for (int c = 0; c < 3; ++c) spec[c][idx] = 0.0;
          continue;
        }
        std::complex<double> dot = 0.0;
        for (int c = 0; c < 3; ++c) dot += f[c] * spec[c][idx];
        for (int c = 0; c < 3; ++c) spec[c][idx] -= f[c] * dot / k2;
        const int shell = int(std::lround(std::sqrt(k2)));
        if (shell >= int(shell_energy.size())) continue;
        // r2c stores only kx >= 0; interior planes represent conjugate pairs
        const double mult = (kx == 0 || kx == n / 2) ? 1.0 : 2.0;
        double e = 0.0;
        for (int c = 0; c < 3; ++c) e += std::norm(spec[c][idx]);
        shell_energy[shell] += 0.5 * mult * e;
      }

  std::vector<double> scale(shell_energy.size(), 0.0);
  for (std::size_t sh = 1; sh < shell_energy.size(); ++sh) {
    const double k = double(sh);
    const double target = p.hit_a0 * std::pow(k, 4.0) * std::exp(-2.0 * k * k / (p.hit_k0 * p.hit_k0));
    if (shell_energy[sh] > 0.0) scale[sh] = std::sqrt(target / shell_energy[sh]);
  }
  for (int kz = 0; kz < n; ++kz)
    for (int ky = 0; ky < n; ++ky)
      for (int kx = 0; kx < nc; ++kx) {
        const std::size_t idx = (std::size_t(kz) * n + ky) * nc + kx;
        const double f[3] = {double(freq(kx)), double(freq(ky)), double(freq(kz))};
        const double k2 = f[0] * f[0] + f[1] * f[1] + f[2] * f[2];
        const int shell = int(std::lround(std::sqrt(k2)));
        const double sc = shell < int(scale.size()) ? scale[shell] : 0.0;
        for (int c = 0; c < 3; ++c) spec[c][idx] *= sc;
      }

  for (int c = 0; c < 3; ++c) {
    fftw_plan bwd = fftw_plan_dft_c2r_3d(n, n, n,
                                         reinterpret_cast<fftw_complex*>(spec[c].data()),
                                         vel[c].data(), FFTW_ESTIMATE);
    fftw_execute(bwd);
    fftw_destroy_plan(bwd);
  }

  // exact rescale of the realized kinetic energy onto K0
  double k_real = 0.0;
  for (std::size_t i = 0; i < nreal; ++i)
    k_real += vel[0][i] * vel[0][i] + vel[1][i] * vel[1][i] + vel[2][i] * vel[2][i];
  k_real *= 0.5 / double(nreal);
  const double rescale = std::sqrt(k0 / k_real);

  const double rho0 = 1.0;
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        const std::size_t idx = (std::size_t(k) * n + j) * n + i;
        const Vec3 u = {rescale * vel[0][idx], rescale * vel[1][idx], rescale * vel[2][idx]};
        s.field(i, j, k) = make_state(rho0, u, rho0 * t0, s.gas);
      }
  return s;
}

// ---------------------------------------------------------------------------
// 1D radial solver (3-vector states) sharing the flux construction and the
// two-stage update, with the spherical/cylindrical geometric source.

namespace radial {

using V3 = std::array<double, 3>;

inline V3 operator+(const V3& a, const V3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline V3 operator-(const V3& a, const V3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline V3 operator*(double s, const V3& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline V3& operator+=(V3& a, const V3& b) {
  a = a + b;
  return a;
}

constexpr double kGamma = 1.4;
// reduced internal dof: the two frozen tangential velocities join xi
constexpr double kK = (3.0 - kGamma) / (kGamma - 1.0);

struct Prim {
  double rho, u, lam;
};

Prim prim(const V3& q) {
  const double ei = q[2] - 0.5 * q[1] * q[1] / q[0];
  if (!(q[0] > 0.0) || !(ei > 0.0)) throw PositivityError("1d state lost positivity");
  return {q[0], q[1] / q[0], (kK + 1.0) * q[0] / (4.0 * ei)};
}

struct Mom {
  double u[7], up[7], um[7], xi[3];
};

Mom moments(const Prim& p) {
  Mom m;
  const double il = 1.0 / p.lam;
  m.u[0] = 1.0;
  m.u[1] = p.u;
  m.up[0] = 0.5 * std::erfc(-std::sqrt(p.lam) * p.u);
  m.up[1] = p.u * m.up[0] + 0.5 * std::exp(-p.lam * p.u * p.u) / std::sqrt(kPi * p.lam);
  m.um[0] = 1.0 - m.up[0];
  m.um[1] = p.u - m.up[1];
  for (int n = 0; n + 2 < 7; ++n) {
    m.u[n + 2] = p.u * m.u[n + 1] + 0.5 * (n + 1) * il * m.u[n];
    m.up[n + 2] = p.u * m.up[n + 1] + 0.5 * (n + 1) * il * m.up[n];
    m.um[n + 2] = p.u * m.um[n + 1] + 0.5 * (n + 1) * il * m.um[n];
  }
  m.xi[0] = 1.0;
  m.xi[1] = 0.5 * kK * il;
  m.xi[2] = 0.25 * (kK * kK + 2.0 * kK) * il * il;
  return m;
}

const double* range(const Mom& m, int r) { return r == 0 ? m.u : r > 0 ? m.up : m.um; }

// <psi u^n>, psi = (1, u, (u^2 + xi^2)/2)
V3 psi_mom(const Mom& m, int r, int n) {
  const double* u = range(m, r);
  return {u[n] * m.xi[0], u[n + 1] * m.xi[0],
          0.5 * (u[n + 2] * m.xi[0] + u[n] * m.xi[1])};
}

// <a psi u^n> for a = c0 + c1 u + c2 (u^2 + xi^2)/2; both psi and a expand
// into weighted (u-power, xi-power) monomials.
V3 psi_mom(const Mom& m, int r, const V3& a, int n) {
  const double* u = range(m, r);
  const auto mono = [&](int p, int x) { return u[p] * m.xi[x]; };
  struct Term {
    double w;
    int du, xi;
  };
  const Term at[4] = {{a[0], 0, 0}, {a[1], 1, 0}, {0.5 * a[2], 2, 0}, {0.5 * a[2], 0, 1}};
  const auto row = [&](const Term* pt, int npsi) {
    double s = 0.0;
    for (const Term& ta : at)
      for (int ip = 0; ip < npsi; ++ip)
        s += ta.w * pt[ip].w * mono(n + ta.du + pt[ip].du, ta.xi + pt[ip].xi);
    return s;
  };
  const Term psi0[1] = {{1.0, 0, 0}};
  const Term psi1[1] = {{1.0, 1, 0}};
  const Term psi2[2] = {{0.5, 2, 0}, {0.5, 0, 1}};
  return {row(psi0, 1), row(psi1, 1), row(psi2, 2)};
}

V3 micro_slope(const Prim& p, const V3& b) {
  const double B0 = b[0] / p.rho, B1 = b[1] / p.rho, B2 = b[2] / p.rho;
  const double q = p.u * p.u + 0.5 * (kK + 1.0) / p.lam;
  const double r2 = B1 - p.u * B0;
  const double r5 = 2.0 * B2 - q * B0;
  V3 a;
  a[2] = 4.0 * p.lam * p.lam / (kK + 1.0) * (r5 - 2.0 * p.u * r2);
  a[1] = 2.0 * p.lam * r2 - p.u * a[2];
  a[0] = B0 - p.u * a[1] - 0.5 * a[2] * q;
  return a;
}

struct Face {
  Prim pl, pr, p0;
  Mom ml, mr, m0;
  V3 al, ar, a0, Al, Ar, A0;
  TauPair tau;
};

Face assemble(const V3& ql, const V3& dql, const V3& qr, const V3& dqr, const V3& q0_unused,
              const V3& dq0, double dt) {
  (void)q0_unused;
  Face f;
  f.pl = prim(ql);
  f.pr = prim(qr);
  f.ml = moments(f.pl);
  f.mr = moments(f.pr);
  const V3 w0 = f.pl.rho * psi_mom(f.ml, +1, 0) + f.pr.rho * psi_mom(f.mr, -1, 0);
  f.p0 = prim(w0);
  f.m0 = moments(f.p0);
  f.al = micro_slope(f.pl, dql);
  f.ar = micro_slope(f.pr, dqr);
  f.a0 = micro_slope(f.p0, dq0);
  f.Al = micro_slope(f.pl, -1.0 * (f.pl.rho * psi_mom(f.ml, 0, f.al, 1)));
  f.Ar = micro_slope(f.pr, -1.0 * (f.pr.rho * psi_mom(f.mr, 0, f.ar, 1)));
  f.A0 = micro_slope(f.p0, -1.0 * (f.p0.rho * psi_mom(f.m0, 0, f.a0, 1)));

  GasModel inv = GasModel::inviscid(kGamma);
  PrimitiveState pc;
  pc.rho = f.p0.rho;
  pc.lam = f.p0.lam;
  const double pl = f.pl.rho / (2.0 * f.pl.lam), pr = f.pr.rho / (2.0 * f.pr.lam);
  f.tau = collision_time(inv, pl, pr, pc, dt);
  return f;
}

V3 eval(const Face& f, const TimeCoefs& c) {
  V3 out{};
  out += f.p0.rho * c.g0 * psi_mom(f.m0, 0, 1);
  out += f.p0.rho * c.abar * psi_mom(f.m0, 0, f.a0, 2);
  out += f.p0.rho * c.Abar * psi_mom(f.m0, 0, f.A0, 1);
  out += f.pl.rho * c.lr * psi_mom(f.ml, +1, 1);
  out += f.pl.rho * c.alr * psi_mom(f.ml, +1, f.al, 2);
  out += f.pl.rho * c.Alr * psi_mom(f.ml, +1, f.Al, 1);
  out += f.pr.rho * c.lr * psi_mom(f.mr, -1, 1);
  out += f.pr.rho * c.alr * psi_mom(f.mr, -1, f.ar, 2);
  out += f.pr.rho * c.Alr * psi_mom(f.mr, -1, f.Ar, 1);
  return out;
}

struct Op {
  std::vector<V3> L, Lt;
};

void geometric_source(const V3& q, double r, int dim, V3& s, const V3& l, V3& st) {
  if (dim <= 1) {
    s = {0, 0, 0};
    st = {0, 0, 0};
    return;
  }
  const double c = -(dim - 1) / r;
  const double u = q[1] / q[0];
  const double p = (kGamma - 1.0) * (q[2] - 0.5 * q[1] * u);
  s = {c * q[1], c * q[1] * u, c * u * (q[2] + p)};
  // Jacobian of s applied to l for the source rate
  const double dp0 = 0.5 * (kGamma - 1.0) * u * u;
  const double dp1 = -(kGamma - 1.0) * u;
  const double dp2 = kGamma - 1.0;
  st = {c * l[1],
        c * (-u * u * l[0] + 2.0 * u * l[1]),
        c * ((-u / q[0] * (q[2] + p) + u * dp0) * l[0] +
             ((q[2] + p) / q[0] + u * dp1) * l[1] + u * (1.0 + dp2) * l[2])};
}

void spatial_op(const std::vector<V3>& q, int nc, double dx, double dt, int dim, Op& op) {
  constexpr int g = 3;
  op.L.assign(nc, V3{});
  op.Lt.assign(nc, V3{});
  std::vector<std::array<double, 6>> coef(nc + 1);  // f0, f1 per face, 3+3
  for (int f = 0; f <= nc; ++f) {
    V3 ql, dql, qr, dqr, q0, dq0;
    for (int comp = 0; comp < 3; ++comp) {
      double fl[5], fr[5], f6[6];
      for (int s = 0; s < 5; ++s) {
        fl[s] = q[g + f - 3 + s][comp];
        fr[s] = q[g + f - 2 + s][comp];
      }
      for (int s = 0; s < 6; ++s) f6[s] = q[g + f - 3 + s][comp];
      const LinePoint l = weno5_value_slope(fl, dx, 0);
      const LinePoint r = weno5_value_slope(fr, dx, 1);
      const LinePoint c = central6_value_slope(f6, dx);
      ql[comp] = l.val;
      dql[comp] = l.slope;
      qr[comp] = r.val;
      dqr[comp] = r.slope;
      q0[comp] = c.val;
      dq0[comp] = c.slope;
    }
    Face fc;
    try {
      fc = assemble(ql, dql, qr, dqr, q0, dq0, dt);
    } catch (const InvalidStateError&) {
      fc = assemble(q[g + f - 1], V3{}, q[g + f], V3{}, V3{}, V3{}, dt);
    }
    const V3 full = eval(fc, integrated_coefs(dt, fc.tau));
    const V3 half = eval(fc, integrated_coefs(0.5 * dt, fc.tau));
    for (int comp = 0; comp < 3; ++comp) {
      coef[f][comp] = (4.0 * half[comp] - full[comp]) / dt;
      coef[f][3 + comp] = 4.0 * (full[comp] - 2.0 * half[comp]) / (dt * dt);
    }
  }
  for (int i = 0; i < nc; ++i) {
    V3 s, st;
    V3 l;
    for (int comp = 0; comp < 3; ++comp) {
      op.L[i][comp] = (coef[i][comp] - coef[i + 1][comp]) / dx;
      op.Lt[i][comp] = (coef[i][3 + comp] - coef[i + 1][3 + comp]) / dx;
    }
    l = op.L[i];
    geometric_source(q[g + i], (i + 0.5) * dx, dim, s, l, st);
    op.L[i] += s;
    op.Lt[i] += st;
  }
}

void ghosts(std::vector<V3>& q, int nc) {
  constexpr int g = 3;
  for (int layer = 1; layer <= g; ++layer) {
    q[g - layer] = q[g + layer - 1];
    q[g - layer][1] = -q[g - layer][1];  // reflective center
    q[g + nc - 1 + layer] = q[g + nc - 1];  // outflow
  }
}

}  // namespace radial

RadialProfile reference_sod_spherical(int n_cells, double t_end, int dim) {
  using namespace radial;  // arithmetic on the 3-vector states
  using radial::V3;
  constexpr int g = 3;
  const double dx = 1.0 / n_cells;
  std::vector<V3> q(n_cells + 2 * g);
  for (int i = 0; i < n_cells; ++i) {
    const double r = (i + 0.5) * dx;
    const double rho = r < 0.5 ? 1.0 : 0.125;
    const double p = r < 0.5 ? 1.0 : 0.1;
    q[g + i] = {rho, 0.0, p / (radial::kGamma - 1.0)};
  }

  double t = 0.0;
  radial::Op op_n, op_mid;
  std::vector<V3> qmid(q.size()), qnew(q.size());
  while (t < t_end) {
    radial::ghosts(q, n_cells);
    double rate = 0.0;
    for (int i = 0; i < n_cells; ++i) {
      const radial::Prim p = radial::prim(q[g + i]);
      const double c = std::sqrt(radial::kGamma / (2.0 * p.lam));
      rate = std::max(rate, (std::abs(p.u) + c) / dx);
    }
    double dt = 0.4 / rate;
    dt = std::min(dt, t_end - t);

    radial::spatial_op(q, n_cells, dx, dt, dim, op_n);
    qmid = q;
    for (int i = 0; i < n_cells; ++i)
      qmid[g + i] = q[g + i] + 0.5 * dt * op_n.L[i] + 0.125 * dt * dt * op_n.Lt[i];
    radial::ghosts(qmid, n_cells);
    radial::spatial_op(qmid, n_cells, dx, dt, dim, op_mid);
    for (int i = 0; i < n_cells; ++i)
      q[g + i] = q[g + i] + dt * op_n.L[i] +
                 dt * dt / 6.0 * (op_n.Lt[i] + 2.0 * op_mid.Lt[i]);
    t += dt;
  }

  RadialProfile out;
  out.time = t;
  out.r.resize(n_cells);
  out.rho.resize(n_cells);
  out.u.resize(n_cells);
  out.p.resize(n_cells);
  for (int i = 0; i < n_cells; ++i) {
    const radial::Prim p = radial::prim(q[g + i]);
    out.r[i] = (i + 0.5) * dx;
    out.rho[i] = p.rho;
    out.u[i] = p.u;
    out.p[i] = p.rho / (2.0 * p.lam);
  }
  return out;
}

}  // namespace gks

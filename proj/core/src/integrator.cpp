#include "gks3d/integrator.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>

namespace gks {

namespace {

// Exceptions must not unwind out of an OpenMP region; capture the first one
// and rethrow it after the loop.
struct ErrorTrap {
  std::exception_ptr err;
  std::mutex mu;
  template <class F>
  void run(F&& f) {
    if (err) return;
    try {
      f();
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!err) err = std::current_exception();
    }
  }
  void rethrow() {
    if (err) std::rethrow_exception(err);
  }
};

}  // namespace

double compute_dt(const Field3D& q, const SolverConfig& cfg) {
  const GridSpec& g = q.grid;
  const bool viscous = cfg.gas.viscosity_model != ViscosityModel::inviscid;
  double rate = 0.0;
  ErrorTrap trap;
#pragma omp parallel for collapse(2) reduction(max : rate)
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      trap.run([&, k, j] {
        for (int i = 0; i < g.nx; ++i) {
          const PrimitiveState p = prim_from_cons(q(i, j, k), cfg.gas);
          const double c = sound_speed(p, cfg.gas);
          double s = 0.0;
          for (int a = 0; a < 3; ++a) s += (std::abs(p.vel[a]) + c) / g.d(a);
          if (viscous) {
            const double nu = cfg.gas.viscosity(temperature(p)) / p.rho;
            for (int a = 0; a < 3; ++a) s += 2.0 * nu / (g.d(a) * g.d(a));
          }
          if (!std::isfinite(s)) throw InvalidStateError("non-finite wave speed in compute_dt");
          rate = std::max(rate, s);
        }
      });
  trap.rethrow();
  return cfg.cfl / rate;
}

namespace {

// First-order interface data from the two adjacent cell averages; used when
// the high-order reconstruction produces a state the flux cannot accept.
GaussPointRecon first_order_recon(const ConservedState& left, const ConservedState& right,
                                  int axis) {
  GaussPointRecon r{};
  r.q[0] = to_face_frame(left.vec(), axis);
  r.q[1] = to_face_frame(right.vec(), axis);
  r.q[2] = 0.5 * (r.q[0] + r.q[1]);
  r.fallback = true;
  return r;
}

struct FaceCoefs {
  Vec5 f0, f1;  // global frame, area included
};

}  // namespace

void spatial_operator(const Field3D& q, double dt, const SolverConfig& cfg,
                      SpatialOperator& op) {
  const GridSpec& g = q.grid;
  const std::size_t ncell = g.interior_cells();
  op.L.assign(ncell, Vec5{});
  op.Lt.assign(ncell, Vec5{});
  op.fallbacks = 0;

  const double vol = g.cell_volume();

  std::vector<LineRecord> bufA;
  std::vector<TanRecord> bufB[2];
  std::vector<FaceCoefs> faces;

  for (int axis = 0; axis < 3; ++axis) {
    const int t1 = (axis + 1) % 3, t2 = (axis + 2) % 3;
    const int na = g.n(axis), n1 = g.n(t1), n2 = g.n(t2);
    const double da = g.d(axis), d1 = g.d(t1), d2 = g.d(t2);
    const double area = d1 * d2;

    const auto idxA = [&](int fa, int j1, int j2) {
      return (std::size_t(fa) * (n1 + 4) + (j1 + 2)) * (n2 + 4) + (j2 + 2);
    };
    const auto idxB = [&](int fa, int j1, int j2) {
      return (std::size_t(fa) * n1 + j1) * (n2 + 4) + (j2 + 2);
    };
    const auto idxF = [&](int fa, int j1, int j2) {
      return (std::size_t(fa) * n1 + j1) * n2 + j2;
    };

    bufA.resize(std::size_t(na + 1) * (n1 + 4) * (n2 + 4));
    bufB[0].resize(std::size_t(na + 1) * n1 * (n2 + 4));
    bufB[1].resize(bufB[0].size());
    faces.resize(std::size_t(na + 1) * n1 * n2);

    // pass 1: normal-direction reconstruction on every face line
#pragma omp parallel for collapse(2)
    for (int fa = 0; fa <= na; ++fa)
      for (int j1 = -2; j1 < n1 + 2; ++j1)
        for (int j2 = -2; j2 < n2 + 2; ++j2) {
          std::array<Vec5, 6> cells;
          int c[3];
          c[t1] = j1;
          c[t2] = j2;
          for (int s = 0; s < 6; ++s) {
            c[axis] = fa - 3 + s;
            cells[s] = q(c[0], c[1], c[2]).vec();
          }
          recon_normal_line(cells, axis, cfg.recon, cfg.gas, da, bufA[idxA(fa, j1, j2)]);
        }

    // pass 2: de-average along t1 at the two Gauss ordinates
#pragma omp parallel for collapse(2)
    for (int fa = 0; fa <= na; ++fa)
      for (int j1 = 0; j1 < n1; ++j1)
        for (int j2 = -2; j2 < n2 + 2; ++j2) {
          const LineRecord* rec[5];
          for (int s = 0; s < 5; ++s) rec[s] = &bufA[idxA(fa, j1 - 2 + s, j2)];
          for (int m = 0; m < 2; ++m)
            recon_tangential_1(rec, m, cfg.recon, d1, bufB[m][idxB(fa, j1, j2)]);
        }

    // pass 3 + flux: Gauss points, interface assembly, time integrals
    long fb = 0;
    ErrorTrap trap;
#pragma omp parallel for collapse(2) reduction(+ : fb)
    for (int fa = 0; fa <= na; ++fa)
      for (int j1 = 0; j1 < n1; ++j1)
        trap.run([&, fa, j1] {
        for (int j2 = 0; j2 < n2; ++j2) {
          GaussFlux pts[4];
          for (int m = 0; m < 2; ++m) {
            const TanRecord* rec[5];
            for (int s = 0; s < 5; ++s) rec[s] = &bufB[m][idxB(fa, j1, j2 - 2 + s)];
            for (int n = 0; n < 2; ++n) {
              GaussPointRecon gp;
              recon_tangential_2(rec, n, cfg.recon, d2, gp);
              try {
                pts[2 * m + n] = assemble_interface(gp, cfg.gas, dt);
              } catch (const InvalidStateError&) {
                if (!cfg.recon.positivity_fallback) throw;
                int c[3];
                c[axis] = fa;
                c[t1] = j1;
                c[t2] = j2;
                int cl[3] = {c[0], c[1], c[2]};
                cl[axis] = fa - 1;
                pts[2 * m + n] = assemble_interface(
                    first_order_recon(q(cl[0], cl[1], cl[2]), q(c[0], c[1], c[2]), axis),
                    cfg.gas, dt);
                ++fb;
              }
            }
          }
          const FaceFluxPair pair = face_flux_integrals(pts, cfg.gas, dt, area);
          FaceCoefs& fc = faces[idxF(fa, j1, j2)];
          Vec5 f0, f1;
          flux_time_coefficients(pair, dt, f0, f1);
          fc.f0 = from_face_frame(f0, axis);
          fc.f1 = from_face_frame(f1, axis);
        }
        });
    trap.rethrow();
    op.fallbacks += fb;

    // divergence
#pragma omp parallel for collapse(2)
    for (int k = 0; k < g.nz; ++k)
      for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
          int c[3] = {i, j, k};
          const int fa = c[axis], j1 = c[t1], j2 = c[t2];
          const std::size_t cell = (std::size_t(k) * g.ny + j) * g.nx + i;
          const FaceCoefs& lo = faces[idxF(fa, j1, j2)];
          const FaceCoefs& hi = faces[idxF(fa + 1, j1, j2)];
          op.L[cell] += (1.0 / vol) * (lo.f0 - hi.f0);
          op.Lt[cell] += (1.0 / vol) * (lo.f1 - hi.f1);
        }
  }

  const Vec3& gr = cfg.gravity;
  if (gr[0] != 0.0 || gr[1] != 0.0 || gr[2] != 0.0) {
#pragma omp parallel for collapse(2)
    for (int k = 0; k < g.nz; ++k)
      for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
          const std::size_t cell = (std::size_t(k) * g.ny + j) * g.nx + i;
          op.L[cell] += gravity_source(q(i, j, k), gr);
          // the source is linear in (rho, rho u), so its rate follows from L
          op.Lt[cell] += gravity_source(ConservedState::from_vec(op.L[cell]), gr);
        }
  }
}

namespace {

void check_valid(const ConservedState& s, const GasModel&, const char* stage, int i, int j,
                 int k) {
  if (!valid_state(s))
    throw PositivityError(std::string(stage) + " state lost positivity at cell (" +
                          std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + ")");
}

}  // namespace

void stage_mid(const Field3D& qn, const SpatialOperator& op, double dt, Field3D& qmid) {
  const GridSpec& g = qn.grid;
#pragma omp parallel for collapse(2)
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const std::size_t cell = (std::size_t(k) * g.ny + j) * g.nx + i;
        const Vec5 v = qn(i, j, k).vec() + (0.5 * dt) * op.L[cell] +
                       (0.125 * dt * dt) * op.Lt[cell];
        qmid(i, j, k) = ConservedState::from_vec(v);
      }
}

void stage_final(const Field3D& qn, const SpatialOperator& op_n, const SpatialOperator& op_mid,
                 double dt, Field3D& out) {
  const GridSpec& g = qn.grid;
#pragma omp parallel for collapse(2)
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const std::size_t cell = (std::size_t(k) * g.ny + j) * g.nx + i;
        const Vec5 v = qn(i, j, k).vec() + dt * op_n.L[cell] +
                       (dt * dt / 6.0) * (op_n.Lt[cell] + 2.0 * op_mid.Lt[cell]);
        out(i, j, k) = ConservedState::from_vec(v);
      }
}

StepStats step(Field3D& q, const SolverConfig& cfg, double dt_fixed) {
  const auto t_start = std::chrono::steady_clock::now();
  const GridSpec& g = q.grid;

  fill_ghosts(q, cfg.bc, cfg.gas);
  const double dt = dt_fixed > 0.0 ? dt_fixed : compute_dt(q, cfg);

  SpatialOperator op_n, op_mid;
  spatial_operator(q, dt, cfg, op_n);

  Field3D qmid(g);
  stage_mid(q, op_n, dt, qmid);
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) check_valid(qmid(i, j, k), cfg.gas, "intermediate", i, j, k);

  fill_ghosts(qmid, cfg.bc, cfg.gas);
  spatial_operator(qmid, dt, cfg, op_mid);

  Field3D qnew(g);
  stage_final(q, op_n, op_mid, dt, qnew);

  StepStats st;
  st.dt = dt;
  st.fallbacks = op_n.fallbacks + op_mid.fallbacks;
  st.rho_min = 1e300;
  st.p_min = 1e300;
  st.rho_max = -1e300;
  st.p_max = -1e300;
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        check_valid(qnew(i, j, k), cfg.gas, "updated", i, j, k);
        const PrimitiveState p = prim_from_cons(qnew(i, j, k), cfg.gas);
        const double pr = pressure(p);
        st.rho_min = std::min(st.rho_min, p.rho);
        st.rho_max = std::max(st.rho_max, p.rho);
        st.p_min = std::min(st.p_min, pr);
        st.p_max = std::max(st.p_max, pr);
        q(i, j, k) = qnew(i, j, k);
      }
  st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return st;
}

}  // namespace gks

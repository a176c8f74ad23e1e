#include "gks3d/grid.hpp"

#include <algorithm>

namespace gks {

namespace {

// Ghost state mirroring `interior` across a boundary face.
ConservedState ghost_state(const ConservedState& interior, const FaceBc& bc, int axis,
                           const GasModel& m) {
  switch (bc.type) {
    case BcType::outflow:
      return interior;
    case BcType::symmetry: {
      ConservedState q = interior;
      q.mom[axis] = -q.mom[axis];
      return q;
    }
    case BcType::isothermal_wall: {
      const PrimitiveState p = prim_from_cons(interior, m);
      PrimitiveState g;
      for (int d = 0; d < 3; ++d) g.vel[d] = 2.0 * bc.wall_velocity[d] - p.vel[d];
      // Reflected temperature, floored so strong gradients cannot drive the
      // ghost state negative; density keeps the interior pressure (p = rho T).
      const double t_int = temperature(p);
      const double t_g = std::max(2.0 * bc.wall_temperature - t_int, 0.1 * bc.wall_temperature);
      g.rho = pressure(p) / t_g;
      g.lam = 0.5 / t_g;
      return cons_from_prim(g, m);
    }
    case BcType::periodic:
      break;
  }
  return interior;  // unreachable; periodic is handled by the caller
}

}  // namespace

void fill_ghosts(Field3D& f, const BoundarySpec& bc, const GasModel& m) {
  const GridSpec& g = f.grid;
  constexpr int gh = GridSpec::ghost;

  // Sweep axis by axis; each sweep covers the ghost range of the axes already
  // done, so edge and corner ghosts come out consistent.
  for (int axis = 0; axis < 3; ++axis) {
    const int n = g.n(axis);
    // transverse ranges: ghost-extended for axes already swept
    int lo[3], hi[3];
    for (int d = 0; d < 3; ++d) {
      lo[d] = d < axis ? -gh : 0;
      hi[d] = g.n(d) + (d < axis ? gh : 0);
    }
    int c[3];
    for (c[2] = lo[2]; c[2] < hi[2]; ++c[2]) {
      for (c[1] = lo[1]; c[1] < hi[1]; ++c[1]) {
        for (c[0] = lo[0]; c[0] < hi[0]; ++c[0]) {
          if (c[axis] != 0) continue;  // one sweep per transverse line
          for (int layer = 1; layer <= gh; ++layer) {
            int lo_idx[3] = {c[0], c[1], c[2]};
            int hi_idx[3] = {c[0], c[1], c[2]};
            lo_idx[axis] = -layer;
            hi_idx[axis] = n - 1 + layer;

            if (bc.face[axis][0].type == BcType::periodic) {
              int src[3] = {lo_idx[0], lo_idx[1], lo_idx[2]};
              src[axis] = n - layer;
              f(lo_idx[0], lo_idx[1], lo_idx[2]) = f(src[0], src[1], src[2]);
            } else {
              int src[3] = {lo_idx[0], lo_idx[1], lo_idx[2]};
              src[axis] = bc.face[axis][0].type == BcType::outflow ? 0 : layer - 1;
              f(lo_idx[0], lo_idx[1], lo_idx[2]) =
                  ghost_state(f(src[0], src[1], src[2]), bc.face[axis][0], axis, m);
            }

            if (bc.face[axis][1].type == BcType::periodic) {
              int src[3] = {hi_idx[0], hi_idx[1], hi_idx[2]};
              src[axis] = layer - 1;
              f(hi_idx[0], hi_idx[1], hi_idx[2]) = f(src[0], src[1], src[2]);
            } else {
              int src[3] = {hi_idx[0], hi_idx[1], hi_idx[2]};
              src[axis] = bc.face[axis][1].type == BcType::outflow ? n - 1 : n - layer;
              f(hi_idx[0], hi_idx[1], hi_idx[2]) =
                  ghost_state(f(src[0], src[1], src[2]), bc.face[axis][1], axis, m);
            }
          }
        }
      }
    }
  }
}

Vec5 gravity_source(const ConservedState& q, const Vec3& g) {
  return {0.0, q.rho * g[0], q.rho * g[1], q.rho * g[2],
          q.mom[0] * g[0] + q.mom[1] * g[1] + q.mom[2] * g[2]};
}

}  // namespace gks

#include "gks3d/flux.hpp"

#include <cmath>

namespace gks {

TauPair collision_time(const GasModel& m, double p_left, double p_right,
                       const PrimitiveState& center, double dt) {
  const double jump = std::abs(p_left - p_right) / (p_left + p_right);
  if (m.viscosity_model == ViscosityModel::inviscid) {
    const double tau = m.tau_eps * dt + m.tau_C * jump * dt;
    return {tau, tau};
  }
  const double tau = m.viscosity(temperature(center)) / pressure(center);
  return {tau, tau + jump * dt};
}

PrimitiveState interface_equilibrium(const PrimitiveState& left, const PrimitiveState& right,
                                     const GasModel& m) {
  const MomentSet ml = compute_moments(left, m);
  const MomentSet mr = compute_moments(right, m);
  const Vec5 w0 = left.rho * moment_psi(ml, Range::positive, 0, 0, 0) +
                  right.rho * moment_psi(mr, Range::negative, 0, 0, 0);
  return prim_from_cons(ConservedState::from_vec(w0), m);
}

namespace {

// b = -rho <(a1 u + a2 v + a3 w) psi>: the time slope balancing the spatial
// ones through the compatibility condition.
Vec5 time_slope_rhs(const MomentSet& ms, double rho, const MicroSlope a[3]) {
  Vec5 b = moment_psi(ms, Range::full, a[0], 1, 0, 0) +
           moment_psi(ms, Range::full, a[1], 0, 1, 0) +
           moment_psi(ms, Range::full, a[2], 0, 0, 1);
  return -rho * b;
}

}  // namespace

namespace {

// rho <X u^p psi ...> for all six term groups; p = 1 gives the flux moments,
// p = 0 the state moments feeding the heat-flux extraction.
void contract_terms(const GaussFlux& g, int p, TermSet& t) {
  const auto slopes = [&](const MomentSet& ms, Range r, const MicroSlope a[3]) {
    return moment_psi(ms, r, a[0], p + 1, 0, 0) + moment_psi(ms, r, a[1], p, 1, 0) +
           moment_psi(ms, r, a[2], p, 0, 1);
  };
  t.g0 = g.p0.rho * moment_psi(g.m0, Range::full, p, 0, 0);
  t.abar = g.p0.rho * slopes(g.m0, Range::full, g.a0);
  t.Abar = g.p0.rho * moment_psi(g.m0, Range::full, g.A0, p, 0, 0);
  t.lr = g.pl.rho * moment_psi(g.ml, Range::positive, p, 0, 0) +
         g.pr.rho * moment_psi(g.mr, Range::negative, p, 0, 0);
  t.alr = g.pl.rho * slopes(g.ml, Range::positive, g.al) +
          g.pr.rho * slopes(g.mr, Range::negative, g.ar);
  t.Alr = g.pl.rho * moment_psi(g.ml, Range::positive, g.Al, p, 0, 0) +
          g.pr.rho * moment_psi(g.mr, Range::negative, g.Ar, p, 0, 0);
}

}  // namespace

GaussFlux assemble_interface(const GaussPointRecon& r, const GasModel& m, double dt) {
  GaussFlux g;
  g.pl = prim_from_cons(ConservedState::from_vec(r.q[0]), m);
  g.pr = prim_from_cons(ConservedState::from_vec(r.q[1]), m);
  g.ml = compute_moments(g.pl, m);
  g.mr = compute_moments(g.pr, m);

  const Vec5 w0 = g.pl.rho * moment_psi(g.ml, Range::positive, 0, 0, 0) +
                  g.pr.rho * moment_psi(g.mr, Range::negative, 0, 0, 0);
  g.p0 = prim_from_cons(ConservedState::from_vec(w0), m);
  g.m0 = compute_moments(g.p0, m);

  for (int d = 0; d < 3; ++d) {
    g.al[d] = solve_micro_slope(g.pl, r.slope[0][d], m);
    g.ar[d] = solve_micro_slope(g.pr, r.slope[1][d], m);
    g.a0[d] = solve_micro_slope(g.p0, r.slope[2][d], m);
  }
  g.Al = solve_micro_slope(g.pl, time_slope_rhs(g.ml, g.pl.rho, g.al), m);
  g.Ar = solve_micro_slope(g.pr, time_slope_rhs(g.mr, g.pr.rho, g.ar), m);
  g.A0 = solve_micro_slope(g.p0, time_slope_rhs(g.m0, g.p0.rho, g.a0), m);

  g.tau = collision_time(m, pressure(g.pl), pressure(g.pr), g.p0, dt);

  g.has_state = m.viscosity_model != ViscosityModel::inviscid && m.prandtl != 1.0;
  contract_terms(g, 1, g.flux_terms);
  if (g.has_state) contract_terms(g, 0, g.state_terms);
  return g;
}

namespace {
// Exponentials need a finite relaxation time; mu = 0 with no pressure jump
// would otherwise divide by zero.
constexpr double kTauFloor = 1e-30;
}  // namespace

TimeCoefs instant_coefs(double t, const TauPair& tau) {
  const double tn = std::max(tau.tau_num, kTauFloor);
  const double e = std::exp(-t / tn);
  TimeCoefs c;
  c.g0 = 1.0 - e;
  c.abar = (t + tau.tau) * e - tau.tau;
  c.Abar = t - tau.tau + tau.tau * e;
  c.lr = e;
  c.alr = -(tau.tau + t) * e;
  c.Alr = -tau.tau * e;
  return c;
}

TimeCoefs integrated_coefs(double delta, const TauPair& tau) {
  const double tn = std::max(tau.tau_num, kTauFloor);
  const double t = tau.tau;
  const double r = tn * (1.0 - std::exp(-delta / tn));  // integral of e^{-t/tn}
  const double s = tn * r - tn * delta * std::exp(-delta / tn);  // integral of t e^{-t/tn}
  TimeCoefs c;
  c.g0 = delta - r;
  c.abar = s + t * r - t * delta;
  c.Abar = 0.5 * delta * delta - t * delta + t * r;
  c.lr = r;
  c.alr = -(t * r + s);
  c.Alr = -t * r;
  return c;
}

namespace {

Vec5 combine(const TermSet& t, const TimeCoefs& c) {
  Vec5 out{};
  out += c.g0 * t.g0;
  out += c.abar * t.abar;
  out += c.Abar * t.Abar;
  out += c.lr * t.lr;
  out += c.alr * t.alr;
  out += c.Alr * t.Alr;
  return out;
}

}  // namespace

FluxResult eval_flux(const GaussFlux& g, const TimeCoefs& c, bool with_state) {
  FluxResult r;
  r.flux = combine(g.flux_terms, c);
  if (with_state) {
    if (!g.has_state)
      throw InvalidStateError("state moments were not assembled for this interface");
    r.state = combine(g.state_terms, c);
  } else {
    r.state = Vec5{};
  }
  return r;
}

double heat_flux(const FluxResult& r, const Vec3& ubar) {
  const double half_u2 = 0.5 * (ubar[0] * ubar[0] + ubar[1] * ubar[1] + ubar[2] * ubar[2]);
  // <X 0.5((u-U)^2+(v-V)^2+(w-W)^2+xi^2)> with psi expanded in monomials.
  auto peculiar_energy = [&](const Vec5& m) {
    return m[4] - ubar[0] * m[1] - ubar[1] * m[2] - ubar[2] * m[3] + half_u2 * m[0];
  };
  return peculiar_energy(r.flux) - ubar[0] * peculiar_energy(r.state);
}

Vec5 instantaneous_flux(const GaussFlux& g, double t) {
  return eval_flux(g, instant_coefs(t, g.tau), false).flux;
}

Vec5 time_integrated_flux(const GaussFlux& g, double delta) {
  return eval_flux(g, integrated_coefs(delta, g.tau), false).flux;
}

Vec5 prandtl_correction(const Vec5& flux, double q, double prandtl) {
  Vec5 f = flux;
  f[4] += (1.0 / prandtl - 1.0) * q;
  return f;
}

FaceFluxPair face_flux_integrals(const GaussFlux pts[4], const GasModel& m, double dt,
                                 double area) {
  const bool fix_pr = m.viscosity_model != ViscosityModel::inviscid && m.prandtl != 1.0;
  FaceFluxPair out{};
  for (int p = 0; p < 4; ++p) {
    const FluxResult full = eval_flux(pts[p], integrated_coefs(dt, pts[p].tau), fix_pr);
    const FluxResult half = eval_flux(pts[p], integrated_coefs(0.5 * dt, pts[p].tau), fix_pr);
    Vec5 f = full.flux, h = half.flux;
    if (fix_pr) {
      f = prandtl_correction(f, heat_flux(full, pts[p].p0.vel), m.prandtl);
      h = prandtl_correction(h, heat_flux(half, pts[p].p0.vel), m.prandtl);
    }
    out.full += (0.25 * area) * f;
    out.half += (0.25 * area) * h;
  }
  return out;
}

void flux_time_coefficients(const FaceFluxPair& pair, double dt, Vec5& f0, Vec5& f1) {
  f0 = (1.0 / dt) * (4.0 * pair.half - pair.full);
  f1 = (4.0 / (dt * dt)) * (pair.full - 2.0 * pair.half);
}

}  // namespace gks

// Brute-force velocity-space evaluation of the time-dependent interface
// distribution and its flux, for checking the analytic moment contractions.
#pragma once

#include <array>
#include <cmath>

#include "gks3d/flux.hpp"
#include "oracles.hpp"

namespace oracle {

// slope factor a(u, v, w, xi) as (constant, xi^2-coefficient)
inline std::array<double, 2> slope_at(const gks::MicroSlope& a, double u, double v, double w) {
  return {a.c[0] + a.c[1] * u + a.c[2] * v + a.c[3] * w +
              0.5 * a.c[4] * (u * u + v * v + w * w),
          0.5 * a.c[4]};
}

// Flux <u^pw psi f(t)> of the analytic interface solution
//   f(t) = (1 - e) g0 + ((t+tau) e - tau) (a_i u_i) g0 + (t - tau + tau e) A g0
//        + e [g_l H(u) + g_r H(-u)]
//        - (tau + t) e [(a_l,i u_i) g_l H(u) + (a_r,i u_i) g_r H(-u)]
//        - tau e [A_l g_l H(u) + A_r g_r H(-u)]
// with e = exp(-t / tau_num). pw = 1 for the flux, 0 for the state moments.
inline gks::Vec5 flux_at(const gks::GaussFlux& g, const gks::GasModel& m, double t, int pw = 1) {
  const double tau = g.tau.tau, tn = g.tau.tau_num;
  const double e = std::exp(-t / tn);
  const double cg0 = 1.0 - e;
  const double cabar = (t + tau) * e - tau;
  const double cAbar = t - tau + tau * e;
  const double clr = e;
  const double calr = -(tau + t) * e;
  const double cAlr = -tau * e;

  struct Piece {
    const gks::PrimitiveState* p;
    const gks::MicroSlope* a;
    const gks::MicroSlope* A;
    double cv, ca, cA;
    int range;
  };
  const Piece pieces[3] = {
      {&g.p0, g.a0, &g.A0, cg0, cabar, cAbar, 0},
      {&g.pl, g.al, &g.Al, clr, calr, cAlr, +1},
      {&g.pr, g.ar, &g.Ar, clr, calr, cAlr, -1},
  };
  const double K = m.K;
  gks::Vec5 out{};
  for (const Piece& pc : pieces) {
    VelocityQuad q{pc.p->rho, pc.p->vel[0], pc.p->vel[1], pc.p->vel[2], pc.p->lam, K};
    q.panels = 4;
    q.nodes = 24;
    const double m2 = K / (2.0 * pc.p->lam);
    const double m4 = (K * K + 2.0 * K) / (4.0 * pc.p->lam * pc.p->lam);
    const auto part = q.integrate3_vec(
        [&](double u, double v, double w, std::array<double, 5>& val) {
          const auto a1 = slope_at(pc.a[0], u, v, w);
          const auto a2 = slope_at(pc.a[1], u, v, w);
          const auto a3 = slope_at(pc.a[2], u, v, w);
          const auto A = slope_at(*pc.A, u, v, w);
          // f / g = F0 + F1 xi^2
          const double F0 = pc.cv + pc.ca * (a1[0] * u + a2[0] * v + a3[0] * w) + pc.cA * A[0];
          const double F1 = pc.ca * (a1[1] * u + a2[1] * v + a3[1] * w) + pc.cA * A[1];
          const double up = pw ? u : 1.0;
          // psi = {1, u, v, w, (u^2+v^2+w^2+xi^2)/2}; <F psi> over xi
          const double s0 = F0 + F1 * m2;  // <f/g>
          const double s1 = F0 * m2 + F1 * m4;
          val[0] = up * s0;
          val[1] = up * u * s0;
          val[2] = up * v * s0;
          val[3] = up * w * s0;
          val[4] = up * 0.5 * ((u * u + v * v + w * w) * s0 + s1);
        },
        pc.range);
    for (int i = 0; i < 5; ++i) out[i] += part[i];
  }
  return out;
}

}  // namespace oracle

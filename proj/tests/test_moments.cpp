#include <cmath>
#include <random>

#include "doctest.h"
#include "gks3d/moments.hpp"
#include "oracles.hpp"

using namespace gks;

namespace {

PrimitiveState random_prim(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::uniform_real_distribution<double> pos(0.3, 3.0);
  return {pos(rng), {u(rng), u(rng), u(rng)}, pos(rng)};
}

}  // namespace

TEST_CASE("one-dimensional moments against quadrature") {
  const GasModel m = GasModel::inviscid(1.4);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const PrimitiveState p = random_prim(rng);
    const MomentSet ms = compute_moments(p, m);
    for (int n = 0; n <= 6; ++n) {
      const double full = oracle::maxwell_moment_1d(p.lam, p.vel[0], n, 0);
      const double up = oracle::maxwell_moment_1d(p.lam, p.vel[0], n, +1);
      const double um = oracle::maxwell_moment_1d(p.lam, p.vel[0], n, -1);
      CHECK(ms.u[n] == doctest::Approx(full).epsilon(1e-11));
      CHECK(ms.up[n] == doctest::Approx(up).epsilon(1e-10));
      CHECK(ms.um[n] == doctest::Approx(um).epsilon(1e-10));
      CHECK(full_moment(ms, 0, n) == ms.u[n]);
      CHECK(half_moment(ms, +1, n) == ms.up[n]);
      CHECK(half_moment(ms, -1, n) == ms.um[n]);
    }
    for (int n = 0; n <= 6; ++n) {
      CHECK(ms.v[n] == doctest::Approx(oracle::maxwell_moment_1d(p.lam, p.vel[1], n, 0)).epsilon(1e-11));
      CHECK(ms.w[n] == doctest::Approx(oracle::maxwell_moment_1d(p.lam, p.vel[2], n, 0)).epsilon(1e-11));
    }
  }
}

TEST_CASE("internal-energy moments") {
  for (double gamma : {1.4, 5.0 / 3.0}) {
    const GasModel m = GasModel::inviscid(gamma);
    const PrimitiveState p{1.0, {0, 0, 0}, 0.7};
    const MomentSet ms = compute_moments(p, m);
    CHECK(ms.xi[0] == 1.0);
    CHECK(ms.xi[1] == doctest::Approx(m.K / (2 * p.lam)).epsilon(1e-14));
    CHECK(ms.xi[2] == doctest::Approx((m.K * m.K + 2 * m.K) / (4 * p.lam * p.lam)).epsilon(1e-14));
  }
}

TEST_CASE("monomial and psi moments factorize correctly") {
  const GasModel m = GasModel::inviscid(1.4);
  std::mt19937_64 rng(23);
  const PrimitiveState p = random_prim(rng);
  const MomentSet ms = compute_moments(p, m);
  CHECK(moment_mono(ms, Range::full, 2, 1, 3, 1) ==
        doctest::Approx(ms.u[2] * ms.v[1] * ms.w[3] * ms.xi[1]).epsilon(1e-14));
  CHECK(moment_mono(ms, Range::positive, 1, 0, 0, 0) == doctest::Approx(ms.up[1]));

  const Vec5 psi = moment_psi(ms, Range::full, 1, 0, 0);
  CHECK(psi[0] == doctest::Approx(ms.u[1]));
  CHECK(psi[1] == doctest::Approx(ms.u[2]));
  CHECK(psi[2] == doctest::Approx(ms.u[1] * ms.v[1]));
  CHECK(psi[3] == doctest::Approx(ms.u[1] * ms.w[1]));
  const double e = 0.5 * (ms.u[3] + ms.u[1] * ms.v[2] + ms.u[1] * ms.w[2] + ms.u[1] * ms.xi[1]);
  CHECK(psi[4] == doctest::Approx(e).epsilon(1e-14));
}

TEST_CASE("psi moments with a micro slope against velocity-space quadrature") {
  const GasModel m = GasModel::inviscid(1.4);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 3; ++trial) {
    const PrimitiveState p = random_prim(rng);
    const MomentSet ms = compute_moments(p, m);
    MicroSlope a;
    for (double& c : a.c) c = u(rng);
    oracle::VelocityQuad q{p.rho, p.vel[0], p.vel[1], p.vel[2], p.lam, m.K};
    // slope factor and psi as polynomials in xi^2 at fixed (u,v,w)
    auto slope_at = [&](double uu, double vv, double ww) {
      return oracle::XiPoly(a.c[0] + a.c[1] * uu + a.c[2] * vv + a.c[3] * ww +
                                0.5 * a.c[4] * (uu * uu + vv * vv + ww * ww),
                            0.5 * a.c[4]);
    };
    const int ranges[3] = {0, +1, -1};
    const Range tags[3] = {Range::full, Range::positive, Range::negative};
    for (int ri = 0; ri < 3; ++ri) {
      const Vec5 got = p.rho * moment_psi(ms, tags[ri], a, 1, 0, 0);
      for (int comp = 0; comp < 5; ++comp) {
        const double want = q.integrate3(
            [&](double uu, double vv, double ww) {
              oracle::XiPoly psi =
                  comp == 0   ? oracle::XiPoly(1)
                  : comp == 1 ? oracle::XiPoly(uu)
                  : comp == 2 ? oracle::XiPoly(vv)
                  : comp == 3 ? oracle::XiPoly(ww)
                              : oracle::XiPoly(0.5 * (uu * uu + vv * vv + ww * ww), 0.5);
              return slope_at(uu, vv, ww) * psi * oracle::XiPoly(uu);
            },
            ranges[ri]);
        CHECK(got[comp] == doctest::Approx(want).epsilon(1e-9).scale(1.0));
      }
    }
  }
}

TEST_CASE("micro-slope solve satisfies rho <a psi> = b") {
  const GasModel m = GasModel::inviscid(1.4);
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const PrimitiveState p = random_prim(rng);
    Vec5 b;
    for (double& x : b) x = u(rng);
    const MicroSlope a = solve_micro_slope(p, b, m);
    const MomentSet ms = compute_moments(p, m);
    const Vec5 got = p.rho * moment_psi(ms, Range::full, a, 0, 0, 0);
    for (int i = 0; i < 5; ++i) CHECK(got[i] == doctest::Approx(b[i]).epsilon(1e-11).scale(1.0));
    // agrees with the generic linear-solve path
    const MicroSlope ag = solve_micro_slope_generic(p, b, m);
    for (int i = 0; i < 5; ++i) CHECK(a.c[i] == doctest::Approx(ag.c[i]).epsilon(1e-9).scale(1.0));
  }
}

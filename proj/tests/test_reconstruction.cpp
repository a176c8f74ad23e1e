#include <array>
#include <cmath>
#include <functional>
#include <random>

#include "doctest.h"
#include "gks3d/reconstruction.hpp"

using namespace gks;

namespace {

// cell average of x^n over [x0, x0 + h]
double mono_avg(double x0, double h, int n) {
  return (std::pow(x0 + h, n + 1) - std::pow(x0, n + 1)) / ((n + 1) * h);
}

}  // namespace

TEST_CASE("point tables reproduce polynomials from cell averages") {
  // cells at integer offsets -2..2, width 1; evaluate at the table's point
  const double pts[4] = {0.5, -0.5, -kGaussOffset, kGaussOffset};
  for (int id = 0; id < 4; ++id) {
    const PointTable& t = point_table(id);
    const double xi = pts[id];
    for (int deg = 0; deg <= 4; ++deg) {
      double f[5];
      for (int c = 0; c < 5; ++c) f[c] = mono_avg(c - 2 - 0.5, 1.0, deg);
      double v = 0, s = 0;
      for (int c = 0; c < 5; ++c) {
        v += t.fv[c] * f[c];
        s += t.fs[c] * f[c];
      }
      CHECK(v == doctest::Approx(std::pow(xi, deg)).epsilon(1e-12).scale(1.0));
      CHECK(s == doctest::Approx(deg * std::pow(xi, deg - 1)).epsilon(1e-11).scale(1.0));
      if (deg <= 2) {
        // every quadratic candidate is exact, so any weights reproduce too
        for (int sub = 0; sub < 3; ++sub) {
          double cv = 0;
          for (int j = 0; j < 3; ++j) cv += t.cv[sub][j] * f[sub + j];
          CHECK(cv == doctest::Approx(std::pow(xi, deg)).epsilon(1e-12).scale(1.0));
        }
      }
    }
    CHECK(t.gamma[0] + t.gamma[1] + t.gamma[2] == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("weno weights revert to linear weights on smooth data") {
  const PointTable& t = point_table(kEdgePlus);
  double f[5];
  for (int c = 0; c < 5; ++c) f[c] = 2.0 + 0.1 * (c - 2);  // smooth linear data
  const WenoWeights w = js_weights(t, f, 1e-6);
  for (int s = 0; s < 3; ++s) CHECK(w.w[s] == doctest::Approx(t.gamma[s]).epsilon(1e-8));
}

TEST_CASE("weno clips the discontinuous stencil") {
  const PointTable& t = point_table(kEdgePlus);
  double f[5] = {1.0, 1.0, 1.0, 10.0, 10.0};  // jump past the face
  const WenoWeights w = js_weights(t, f, 1e-6);
  // candidates touching the jump must be suppressed
  CHECK(w.w[1] < 1e-4);
  CHECK(w.w[2] < 1e-4);
  const double v = weno_value(t, w, f);
  CHECK(v == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(v >= 1.0 - 1e-10);
}

TEST_CASE("edge reconstruction is fifth order on smooth data") {
  auto fun = [](double x) { return std::sin(1.3 * x + 0.4); };
  double prev_err = 0, prev_serr = 0, prev_lserr = 0;
  for (int lev = 0; lev < 3; ++lev) {
    const double h = 0.1 / (1 << lev);
    double f[5];
    for (int c = 0; c < 5; ++c) {
      // exact cell averages of sin
      const double a = (c - 2.5) * h, b = a + h;
      f[c] = (std::cos(1.3 * a + 0.4) - std::cos(1.3 * b + 0.4)) / (1.3 * h);
    }
    const LinePoint lp = weno5_value_slope(f, h, 0);
    const LinePoint ll = linear5_value_slope(f, h, 0);
    const double exact_s = 1.3 * std::cos(1.3 * 0.5 * h + 0.4);
    const double err = std::abs(lp.val - fun(0.5 * h));
    const double serr = std::abs(lp.slope - exact_s);
    const double lserr = std::abs(ll.slope - exact_s);
    if (lev > 0) {
      CHECK(std::log2(prev_err / err) > 4.5);
      // weighted candidate slopes are second order; the full stencil is fourth
      CHECK(std::log2(prev_serr / serr) > 1.8);
      CHECK(std::log2(prev_lserr / lserr) > 3.5);
    }
    prev_err = err;
    prev_serr = serr;
    prev_lserr = lserr;
  }
}

TEST_CASE("sided stencils: side 1 mirrors side 0") {
  double f[5] = {0.9, 1.1, 1.6, 2.4, 3.1};
  double rev[5];
  for (int c = 0; c < 5; ++c) rev[c] = f[4 - c];
  const LinePoint a = weno5_value_slope(f, 0.5, 0);
  const LinePoint b = weno5_value_slope(rev, 0.5, 1);
  CHECK(a.val == doctest::Approx(b.val).epsilon(1e-13));
  CHECK(a.slope == doctest::Approx(-b.slope).epsilon(1e-13));
}

TEST_CASE("six-cell face polynomial is exact to degree five") {
  const double h = 0.25;
  for (int deg = 0; deg <= 5; ++deg) {
    double f[6];
    for (int c = 0; c < 6; ++c) f[c] = mono_avg((c - 3) * h, h, deg);  // face at x = 0
    const LinePoint lp = central6_value_slope(f, h);
    CHECK(lp.val == doctest::Approx(deg == 0 ? 1.0 : 0.0).epsilon(1e-11).scale(1.0));
    CHECK(lp.slope == doctest::Approx(deg == 1 ? 1.0 : 0.0).epsilon(1e-10).scale(1.0));
  }
}

namespace {

// run the three reconstruction passes for the x-face at x = 0, with the test
// polynomial supplied through its exact cell averages
GaussPointRecon run_pipeline(const std::function<double(int, double, double, double)>& avg,
                             const ReconConfig& cfg, const GasModel& gas, double h, int gm,
                             int gn) {
  // pass 1 over a 5x5 patch of (y, z) cells
  LineRecord lines[5][5];
  for (int j = 0; j < 5; ++j)
    for (int k = 0; k < 5; ++k) {
      std::array<Vec5, 6> cells;
      for (int i = 0; i < 6; ++i)
        for (int c = 0; c < 5; ++c)
          cells[i][c] = avg(c, (i - 3) * h, (j - 2) * h - 0.5 * h, (k - 2) * h - 0.5 * h);
      recon_normal_line(cells, 0, cfg, gas, h, lines[j][k]);
    }
  TanRecord tans[5];
  for (int k = 0; k < 5; ++k) {
    const LineRecord* rec[5] = {&lines[0][k], &lines[1][k], &lines[2][k], &lines[3][k],
                                &lines[4][k]};
    recon_tangential_1(rec, gm, cfg, h, tans[k]);
  }
  const TanRecord* rec[5] = {&tans[0], &tans[1], &tans[2], &tans[3], &tans[4]};
  GaussPointRecon out;
  recon_tangential_2(rec, gn, cfg, h, out);
  return out;
}

}  // namespace

TEST_CASE("three-pass pipeline recovers point values and slopes of a quadratic") {
  const GasModel gas = GasModel::inviscid(1.4);
  const double h = 0.2;
  // positive quadratic per component; exact separable cell averages
  const double A[5][10] = {
      // 1, x, y, z, x^2, y^2, z^2, xy, xz, yz
      {2.0, 0.3, -0.2, 0.1, 0.05, -0.04, 0.03, 0.02, -0.01, 0.015},
      {0.4, -0.1, 0.2, 0.05, 0.02, 0.01, -0.02, 0.03, 0.01, -0.02},
      {0.1, 0.2, -0.1, 0.1, -0.01, 0.02, 0.01, -0.02, 0.02, 0.01},
      {-0.2, 0.1, 0.1, -0.05, 0.03, -0.01, 0.02, 0.01, -0.03, 0.02},
      {5.0, 0.2, 0.3, -0.2, 0.04, 0.05, -0.03, 0.02, 0.01, -0.01},
  };
  auto value = [&](int c, double x, double y, double z) {
    const double* a = A[c];
    return a[0] + a[1] * x + a[2] * y + a[3] * z + a[4] * x * x + a[5] * y * y + a[6] * z * z +
           a[7] * x * y + a[8] * x * z + a[9] * y * z;
  };
  auto avg = [&](int c, double x0, double y0, double z0) {
    const double* a = A[c];
    const double mx = x0 + 0.5 * h, my = y0 + 0.5 * h, mz = z0 + 0.5 * h;
    const double v = h * h / 12.0;  // <x^2> - <x>^2 over a cell
    return value(c, mx, my, mz) + (a[4] + a[5] + a[6]) * v;
  };
  for (ReconMode mode : {ReconMode::weno5_js, ReconMode::linear5}) {
    for (int gm = 0; gm < 2; ++gm)
      for (int gn = 0; gn < 2; ++gn) {
        ReconConfig cfg;
        cfg.mode = mode;
        const GaussPointRecon out = run_pipeline(avg, cfg, gas, h, gm, gn);
        const double yg = gauss_ordinate(gm) * h, zg = gauss_ordinate(gn) * h;
        for (int side = 0; side < 3; ++side)
          for (int c = 0; c < 5; ++c) {
            const double* a = A[c];
            CHECK(out.q[side][c] == doctest::Approx(value(c, 0, yg, zg)).epsilon(1e-10).scale(1.0));
            const double dx = a[1] + a[7] * yg + a[8] * zg;
            const double dy = a[2] + 2 * a[5] * yg + a[7] * 0 + a[9] * zg;
            const double dz = a[3] + 2 * a[6] * zg + a[8] * 0 + a[9] * yg;
            CHECK(out.slope[side][0][c] == doctest::Approx(dx).epsilon(1e-9).scale(1.0));
            CHECK(out.slope[side][1][c] == doctest::Approx(dy).epsilon(1e-9).scale(1.0));
            CHECK(out.slope[side][2][c] == doctest::Approx(dz).epsilon(1e-9).scale(1.0));
          }
        CHECK_FALSE(out.fallback);
      }
  }
}

TEST_CASE("characteristic projection is transparent for linear reconstruction") {
  const GasModel gas = GasModel::inviscid(1.4);
  const double h = 0.1;
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(-0.05, 0.05);
  // smooth random-ish field: base state plus small smooth perturbations
  double phase[5][3];
  for (auto& row : phase)
    for (double& p : row) p = u(rng) * 40;
  auto avg = [&](int c, double x0, double y0, double z0) {
    const double base[5] = {1.0, 0.1, -0.05, 0.08, 2.0};
    const double x = x0 + 0.5 * h, y = y0 + 0.5 * h, z = z0 + 0.5 * h;
    return base[c] + 0.02 * std::sin(x + phase[c][0]) * std::cos(y + phase[c][1]) *
                         std::sin(z + phase[c][2]);
  };
  ReconConfig comp, chr;
  comp.mode = chr.mode = ReconMode::linear5;
  comp.projection = Projection::component;
  chr.projection = Projection::characteristic;
  const GaussPointRecon a = run_pipeline(avg, comp, gas, h, 0, 1);
  const GaussPointRecon b = run_pipeline(avg, chr, gas, h, 0, 1);
  for (int side = 0; side < 3; ++side)
    for (int c = 0; c < 5; ++c) {
      CHECK(a.q[side][c] == doctest::Approx(b.q[side][c]).epsilon(1e-10).scale(1.0));
      for (int d = 0; d < 3; ++d)
        CHECK(a.slope[side][d][c] == doctest::Approx(b.slope[side][d][c]).epsilon(1e-8).scale(1.0));
    }
}

TEST_CASE("characteristic weno at a shock stays within the data range") {
  const GasModel gas = GasModel::inviscid(1.4);
  const double h = 0.05;
  // 1D-in-3D step in density and pressure
  auto avg = [&](int c, double x0, double, double) {
    const bool left = x0 + 0.5 * h < 0;
    const double rho = left ? 1.0 : 0.125, p = left ? 1.0 : 0.1;
    const double vals[5] = {rho, 0, 0, 0, p / 0.4};
    return vals[c];
  };
  ReconConfig cfg;
  cfg.projection = Projection::characteristic;
  const GaussPointRecon out = run_pipeline(avg, cfg, gas, h, 0, 0);
  for (int side = 0; side < 2; ++side) {
    CHECK(out.q[side][0] >= 0.125 - 1e-3);
    CHECK(out.q[side][0] <= 1.0 + 1e-3);
    CHECK(out.q[side][4] >= 0.1 / 0.4 - 1e-3);
    CHECK(out.q[side][4] <= 1.0 / 0.4 + 1e-3);
  }
}

#include "gks3d/reconstruction.hpp"

#include <algorithm>
#include <cmath>

namespace gks {

namespace {

// Solve the (n x n) system mapping polynomial coefficients to cell averages of
// the cells at integer offsets; returns the row vector evaluating p^(deriv) at
// xi as a combination of the cell averages.
void avg_eval_row(const int* cells, int n, double xi, int deriv, double* row) {
  long double M[6][7];
  for (int r = 0; r < n; ++r) {
    const long double c = cells[r];
    for (int j = 0; j < n; ++j)
      M[r][j] = (std::pow(c + 0.5L, j + 1) - std::pow(c - 0.5L, j + 1)) / (j + 1);
  }
  // invert by solving against each unit vector, accumulating x_row . e_j
  long double inv[6][6];
  for (int col = 0; col < n; ++col) {
    long double A[6][7];
    for (int r = 0; r < n; ++r) {
      for (int j = 0; j < n; ++j) A[r][j] = M[r][j];
      A[r][n] = (r == col) ? 1.0L : 0.0L;
    }
    for (int c = 0; c < n; ++c) {
      int piv = c;
      for (int r = c + 1; r < n; ++r)
        if (fabsl(A[r][c]) > fabsl(A[piv][c])) piv = r;
      for (int j = 0; j <= n; ++j) std::swap(A[piv][j], A[c][j]);
      for (int r = 0; r < n; ++r) {
        if (r == c) continue;
        const long double f = A[r][c] / A[c][c];
        for (int j = c; j <= n; ++j) A[r][j] -= f * A[c][j];
      }
    }
    for (int r = 0; r < n; ++r) inv[r][col] = A[r][n] / A[r][r];
  }
  long double xrow[6];
  for (int j = 0; j < n; ++j) {
    if (deriv == 0)
      xrow[j] = std::pow((long double)xi, j);
    else
      xrow[j] = j >= 1 ? j * std::pow((long double)xi, j - 1) : 0.0L;
  }
  for (int c = 0; c < n; ++c) {
    long double s = 0;
    for (int j = 0; j < n; ++j) s += xrow[j] * inv[j][c];
    row[c] = (double)s;
  }
}

PointTable make_point_table(double xi) {
  PointTable t{};
  static const int sub[3][3] = {{-2, -1, 0}, {-1, 0, 1}, {0, 1, 2}};
  static const int full[5] = {-2, -1, 0, 1, 2};
  double r5[5], r5s[5];
  avg_eval_row(full, 5, xi, 0, r5);
  avg_eval_row(full, 5, xi, 1, r5s);
  for (int i = 0; i < 5; ++i) {
    t.fv[i] = r5[i];
    t.fs[i] = r5s[i];
  }
  double rc[3][5] = {};
  for (int s = 0; s < 3; ++s) {
    double r[3], rs[3];
    avg_eval_row(sub[s], 3, xi, 0, r);
    avg_eval_row(sub[s], 3, xi, 1, rs);
    for (int j = 0; j < 3; ++j) {
      t.cv[s][j] = r[j];
      t.cs[s][j] = rs[j];
      rc[s][sub[s][j] + 2] = r[j];
    }
  }
  // linear weights: exact at the points we use (cells 0 and 4 pin the outer
  // candidates, cell 2 the middle one)
  t.gamma[0] = r5[0] / rc[0][0];
  t.gamma[2] = r5[4] / rc[2][4];
  t.gamma[1] = (r5[2] - t.gamma[0] * rc[0][2] - t.gamma[2] * rc[2][2]) / rc[1][2];
  return t;
}

const PointTable kTables[4] = {
    make_point_table(0.5),
    make_point_table(-0.5),
    make_point_table(-kGaussOffset),
    make_point_table(kGaussOffset),
};

inline void beta_js(const double f[5], double b[3]) {
  const double d0 = f[0] - 2 * f[1] + f[2];
  const double d1 = f[1] - 2 * f[2] + f[3];
  const double d2 = f[2] - 2 * f[3] + f[4];
  const double e0 = f[0] - 4 * f[1] + 3 * f[2];
  const double e1 = f[1] - f[3];
  const double e2 = 3 * f[2] - 4 * f[3] + f[4];
  b[0] = (13.0 / 12.0) * d0 * d0 + 0.25 * e0 * e0;
  b[1] = (13.0 / 12.0) * d1 * d1 + 0.25 * e1 * e1;
  b[2] = (13.0 / 12.0) * d2 * d2 + 0.25 * e2 * e2;
}

}  // namespace

const PointTable& point_table(int id) { return kTables[id]; }

WenoWeights js_weights(const PointTable& t, const double f[5], double eps) {
  double b[3];
  beta_js(f, b);
  const auto [mn, mx] = std::minmax({f[0], f[1], f[2], f[3], f[4]});
  const double range = mx - mn;
  const double e = eps * range * range + 1e-40;
  WenoWeights w;
  double sum = 0;
  for (int s = 0; s < 3; ++s) {
    const double d = e + b[s];
    w.w[s] = t.gamma[s] / (d * d);
    sum += w.w[s];
  }
  const double inv = 1.0 / sum;
  for (int s = 0; s < 3; ++s) w.w[s] *= inv;
  return w;
}

double weno_value(const PointTable& t, const WenoWeights& w, const double f[5]) {
  double v = 0;
  for (int s = 0; s < 3; ++s)
    v += w.w[s] * (t.cv[s][0] * f[s] + t.cv[s][1] * f[s + 1] + t.cv[s][2] * f[s + 2]);
  return v;
}

double weno_slope(const PointTable& t, const WenoWeights& w, const double f[5]) {
  double v = 0;
  for (int s = 0; s < 3; ++s)
    v += w.w[s] * (t.cs[s][0] * f[s] + t.cs[s][1] * f[s + 1] + t.cs[s][2] * f[s + 2]);
  return v;
}

double linear_value(const PointTable& t, const double f[5]) {
  return t.fv[0] * f[0] + t.fv[1] * f[1] + t.fv[2] * f[2] + t.fv[3] * f[3] + t.fv[4] * f[4];
}

double linear_slope(const PointTable& t, const double f[5]) {
  return t.fs[0] * f[0] + t.fs[1] * f[1] + t.fs[2] * f[2] + t.fs[3] * f[3] + t.fs[4] * f[4];
}

LinePoint weno5_value_slope(const double f[5], double dx, int side, double eps) {
  const PointTable& t = point_table(side == 0 ? kEdgePlus : kEdgeMinus);
  const WenoWeights w = js_weights(t, f, eps);
  return {weno_value(t, w, f), weno_slope(t, w, f) / dx};
}

LinePoint linear5_value_slope(const double f[5], double dx, int side) {
  const PointTable& t = point_table(side == 0 ? kEdgePlus : kEdgeMinus);
  return {linear_value(t, f), linear_slope(t, f) / dx};
}

LinePoint central6_value_slope(const double f[6], double dx) {
  static const struct C6 {
    double v[6], s[6];
    C6() {
      static const int cells[6] = {-2, -1, 0, 1, 2, 3};
      avg_eval_row(cells, 6, 0.5, 0, v);
      avg_eval_row(cells, 6, 0.5, 1, s);
    }
  } c6;
  double v = 0, s = 0;
  for (int i = 0; i < 6; ++i) {
    v += c6.v[i] * f[i];
    s += c6.s[i] * f[i];
  }
  return {v, s / dx};
}

namespace {

// Reconstruct value + slope of q and value of the companion derivative d,
// reusing q's nonlinear weights for d (and for q's slope).
inline void tangential_eval(const PointTable& t, bool weno, double eps, const double q[5],
                            double inv_dx, double& qv, double& qs) {
  if (weno) {
    const WenoWeights w = js_weights(t, q, eps);
    qv = weno_value(t, w, q);
    qs = weno_slope(t, w, q) * inv_dx;
  } else {
    qv = linear_value(t, q);
    qs = linear_slope(t, q) * inv_dx;
  }
}

}  // namespace

void recon_normal_line(const std::array<Vec5, 6>& cells, int axis, const ReconConfig& cfg,
                       const GasModel& gas, double dx, LineRecord& out) {
  const bool weno = cfg.mode == ReconMode::weno5_js;
  std::array<Vec5, 6> data;
  EigenBasis basis;
  const bool chr = cfg.projection == Projection::characteristic;
  bool chr_ok = chr;
  if (chr) {
    ConservedState qs;
    Vec5 mid;
    for (int c = 0; c < 5; ++c) mid[c] = 0.5 * (cells[2][c] + cells[3][c]);
    qs = ConservedState::from_vec(mid);
    if (valid_state(qs)) {
      basis = eigen_decomposition(qs, axis, gas);
      for (int i = 0; i < 6; ++i) data[i] = basis.project(cells[i]);
    } else {
      chr_ok = false;  // fall back to component-wise for this face
    }
  }
  if (!chr_ok) data = cells;

  const PointTable& tp = point_table(kEdgePlus);
  const PointTable& tm = point_table(kEdgeMinus);
  Vec5 ql, qr, q0, dql, dqr, dq0;
  for (int c = 0; c < 5; ++c) {
    const double fl[5] = {data[0][c], data[1][c], data[2][c], data[3][c], data[4][c]};
    const double fr[5] = {data[1][c], data[2][c], data[3][c], data[4][c], data[5][c]};
    if (weno) {
      const WenoWeights wl = js_weights(tp, fl, cfg.weno_epsilon);
      const WenoWeights wr = js_weights(tm, fr, cfg.weno_epsilon);
      ql[c] = weno_value(tp, wl, fl);
      dql[c] = weno_slope(tp, wl, fl) / dx;
      qr[c] = weno_value(tm, wr, fr);
      dqr[c] = weno_slope(tm, wr, fr) / dx;
    } else {
      ql[c] = linear_value(tp, fl);
      dql[c] = linear_slope(tp, fl) / dx;
      qr[c] = linear_value(tm, fr);
      dqr[c] = linear_slope(tm, fr) / dx;
    }
    const double f6[6] = {data[0][c], data[1][c], data[2][c], data[3][c], data[4][c], data[5][c]};
    const LinePoint lp = central6_value_slope(f6, dx);
    q0[c] = lp.val;
    dq0[c] = lp.slope;
  }
  if (chr_ok) {
    ql = basis.recover(ql);
    qr = basis.recover(qr);
    q0 = basis.recover(q0);
    dql = basis.recover(dql);
    dqr = basis.recover(dqr);
    dq0 = basis.recover(dq0);
  }
  out.ql = to_face_frame(ql, axis);
  out.qr = to_face_frame(qr, axis);
  out.q0 = to_face_frame(q0, axis);
  out.dql = to_face_frame(dql, axis);
  out.dqr = to_face_frame(dqr, axis);
  out.dq0 = to_face_frame(dq0, axis);
}

void recon_tangential_1(const LineRecord* rec[5], int m, const ReconConfig& cfg, double dt1,
                        TanRecord& out) {
  const bool weno = cfg.mode == ReconMode::weno5_js;
  const PointTable& t = point_table(m == 0 ? kGauss0 : kGauss1);
  const double inv = 1.0 / dt1;
  for (int c = 0; c < 5; ++c) {
    const double ql[5] = {rec[0]->ql[c], rec[1]->ql[c], rec[2]->ql[c], rec[3]->ql[c], rec[4]->ql[c]};
    const double qr[5] = {rec[0]->qr[c], rec[1]->qr[c], rec[2]->qr[c], rec[3]->qr[c], rec[4]->qr[c]};
    const double q0[5] = {rec[0]->q0[c], rec[1]->q0[c], rec[2]->q0[c], rec[3]->q0[c], rec[4]->q0[c]};
    const double dl[5] = {rec[0]->dql[c], rec[1]->dql[c], rec[2]->dql[c], rec[3]->dql[c], rec[4]->dql[c]};
    const double dr[5] = {rec[0]->dqr[c], rec[1]->dqr[c], rec[2]->dqr[c], rec[3]->dqr[c], rec[4]->dqr[c]};
    const double d0[5] = {rec[0]->dq0[c], rec[1]->dq0[c], rec[2]->dq0[c], rec[3]->dq0[c], rec[4]->dq0[c]};
    if (weno) {
      const WenoWeights wl = js_weights(t, ql, cfg.weno_epsilon);
      const WenoWeights wr = js_weights(t, qr, cfg.weno_epsilon);
      const WenoWeights w0 = js_weights(t, q0, cfg.weno_epsilon);
      out.ql[c] = weno_value(t, wl, ql);
      out.dtl[c] = weno_slope(t, wl, ql) * inv;
      out.dnl[c] = weno_value(t, wl, dl);
      out.qr[c] = weno_value(t, wr, qr);
      out.dtr[c] = weno_slope(t, wr, qr) * inv;
      out.dnr[c] = weno_value(t, wr, dr);
      out.q0[c] = weno_value(t, w0, q0);
      out.dt0[c] = weno_slope(t, w0, q0) * inv;
      out.dn0[c] = weno_value(t, w0, d0);
    } else {
      out.ql[c] = linear_value(t, ql);
      out.dtl[c] = linear_slope(t, ql) * inv;
      out.dnl[c] = linear_value(t, dl);
      out.qr[c] = linear_value(t, qr);
      out.dtr[c] = linear_slope(t, qr) * inv;
      out.dnr[c] = linear_value(t, dr);
      out.q0[c] = linear_value(t, q0);
      out.dt0[c] = linear_slope(t, q0) * inv;
      out.dn0[c] = linear_value(t, d0);
    }
  }
}

void recon_tangential_2(const TanRecord* rec[5], int n, const ReconConfig& cfg, double dt2,
                        GaussPointRecon& out) {
  const bool weno = cfg.mode == ReconMode::weno5_js;
  const PointTable& t = point_table(n == 0 ? kGauss0 : kGauss1);
  const double inv = 1.0 / dt2;
  const Vec5 TanRecord::* qm[3] = {&TanRecord::ql, &TanRecord::qr, &TanRecord::q0};
  const Vec5 TanRecord::* dnm[3] = {&TanRecord::dnl, &TanRecord::dnr, &TanRecord::dn0};
  const Vec5 TanRecord::* dtm[3] = {&TanRecord::dtl, &TanRecord::dtr, &TanRecord::dt0};
  for (int side = 0; side < 3; ++side) {
    for (int c = 0; c < 5; ++c) {
      const double q[5] = {(rec[0]->*qm[side])[c], (rec[1]->*qm[side])[c], (rec[2]->*qm[side])[c],
                           (rec[3]->*qm[side])[c], (rec[4]->*qm[side])[c]};
      const double dn[5] = {(rec[0]->*dnm[side])[c], (rec[1]->*dnm[side])[c], (rec[2]->*dnm[side])[c],
                            (rec[3]->*dnm[side])[c], (rec[4]->*dnm[side])[c]};
      const double dt[5] = {(rec[0]->*dtm[side])[c], (rec[1]->*dtm[side])[c], (rec[2]->*dtm[side])[c],
                            (rec[3]->*dtm[side])[c], (rec[4]->*dtm[side])[c]};
      if (weno) {
        const WenoWeights w = js_weights(t, q, cfg.weno_epsilon);
        out.q[side][c] = weno_value(t, w, q);
        out.slope[side][2][c] = weno_slope(t, w, q) * inv;
        out.slope[side][0][c] = weno_value(t, w, dn);
        out.slope[side][1][c] = weno_value(t, w, dt);
      } else {
        out.q[side][c] = linear_value(t, q);
        out.slope[side][2][c] = linear_slope(t, q) * inv;
        out.slope[side][0][c] = linear_value(t, dn);
        out.slope[side][1][c] = linear_value(t, dt);
      }
    }
  }
  out.fallback = false;
}

}  // namespace gks

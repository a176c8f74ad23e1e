#pragma once

#include <array>

#include "gks3d/state.hpp"

namespace gks {

enum class ReconMode { weno5_js, linear5 };
enum class Projection { component, characteristic };

struct ReconConfig {
  ReconMode mode = ReconMode::weno5_js;
  Projection projection = Projection::component;
  double weno_epsilon = 1e-6;  // scaled by the squared data range per stencil
  bool positivity_fallback = true;
};

/// Coefficients of one 5-cell reconstruction evaluated at a fixed point
/// (cell-width units, origin at the center cell). Candidates are the three
/// quadratic substencils; gamma are the exact linear weights at that point.
struct PointTable {
  double cv[3][3];
  double cs[3][3];
  double gamma[3];
  double fv[5];
  double fs[5];
};

enum PointId {
  kEdgePlus = 0,   // xi = +1/2  (left state at the right edge)
  kEdgeMinus = 1,  // xi = -1/2  (right state, stencil centered past the face)
  kGauss0 = 2,     // xi = -1/(2*sqrt(3))
  kGauss1 = 3,     // xi = +1/(2*sqrt(3))
};

const PointTable& point_table(int id);

/// Gauss ordinate offsets (cell-width units) matching kGauss0/kGauss1.
inline constexpr double kGaussOffset = 0.28867513459481288225;  // 1/(2*sqrt(3))
inline double gauss_ordinate(int m) { return m == 0 ? -kGaussOffset : kGaussOffset; }

struct WenoWeights {
  double w[3];
};

/// Jiang-Shu nonlinear weights for the data f[0..4] at the table's point.
WenoWeights js_weights(const PointTable& t, const double f[5], double eps);

double weno_value(const PointTable& t, const WenoWeights& w, const double f[5]);
double weno_slope(const PointTable& t, const WenoWeights& w, const double f[5]);
double linear_value(const PointTable& t, const double f[5]);
double linear_slope(const PointTable& t, const double f[5]);

struct LinePoint {
  double val, slope;
};

/// Spec-level entry: WENO-JS value and slope at a cell edge.
LinePoint weno5_value_slope(const double f[5], double dx, int side, double eps = 1e-6);
/// Linear (full-stencil) counterpart.
LinePoint linear5_value_slope(const double f[5], double dx, int side);

/// Value and slope of the 6-cell polynomial at the face between cells 2 and 3.
LinePoint central6_value_slope(const double f[6], double dx);

/// Pass 1 output for one face: point values and normal slopes for the left,
/// right and central reconstructions (face-local frame).
struct LineRecord {
  Vec5 ql, qr, q0;
  Vec5 dql, dqr, dq0;
};

/// Pass 2 output at one tangential Gauss ordinate.
struct TanRecord {
  Vec5 ql, qr, q0;       // de-averaged along t1
  Vec5 dnl, dnr, dn0;    // normal slopes
  Vec5 dtl, dtr, dt0;    // t1 slopes
};

/// Final Gauss-point reconstruction: values and all three slope vectors per
/// side, in the face-local frame.
struct GaussPointRecon {
  Vec5 q[3];         // left, right, center values
  Vec5 slope[3][3];  // [side][axis: n, t1, t2]
  bool fallback = false;
};

/// Normal-direction (pass 1) reconstruction for the face between cells[2] and
/// cells[3]; cells are global-frame averages ordered along the normal axis.
void recon_normal_line(const std::array<Vec5, 6>& cells, int axis, const ReconConfig& cfg,
                       const GasModel& gas, double dx, LineRecord& out);

/// Pass 2: de-average 5 adjacent line records along the first tangential axis
/// at Gauss ordinate m.
void recon_tangential_1(const LineRecord* rec[5], int m, const ReconConfig& cfg, double dt1,
                        TanRecord& out);

/// Pass 3: same along the second tangential axis at ordinate n.
void recon_tangential_2(const TanRecord* rec[5], int n, const ReconConfig& cfg, double dt2,
                        GaussPointRecon& out);

}  // namespace gks

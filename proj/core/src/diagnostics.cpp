#include "gks3d/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace gks {

double kinetic_energy(const Field3D& f, double rho0) {
  const GridSpec& g = f.grid;
  double sum = 0.0;
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const ConservedState& q = f(i, j, k);
        sum += 0.5 *
               (q.mom[0] * q.mom[0] + q.mom[1] * q.mom[1] + q.mom[2] * q.mom[2]) / q.rho;
      }
  return sum / (double(g.interior_cells()) * rho0);
}

std::vector<std::pair<double, double>> dissipation_rate(
    const std::vector<std::pair<double, double>>& ek) {
  const std::size_t n = ek.size();
  if (n < 3) throw std::invalid_argument("dissipation_rate needs at least 3 samples");
  std::vector<std::pair<double, double>> out(n);
  const auto slope = [&](std::size_t a, std::size_t b) {
    return (ek[b].second - ek[a].second) / (ek[b].first - ek[a].first);
  };
  out[0] = {ek[0].first, -slope(0, 1)};
  out[n - 1] = {ek[n - 1].first, -slope(n - 2, n - 1)};
  for (std::size_t i = 1; i + 1 < n; ++i) out[i] = {ek[i].first, -slope(i - 1, i + 1)};
  return out;
}

double density_rms(const Field3D& f) {
  const GridSpec& g = f.grid;
  const double n = double(g.interior_cells());
  double mean = 0.0;
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) mean += f(i, j, k).rho;
  mean /= n;
  double var = 0.0;
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const double d = f(i, j, k).rho - mean;
        var += d * d;
      }
  return std::sqrt(var / n);
}

namespace {

inline double vel(const Field3D& f, int c, int i, int j, int k) {
  const ConservedState& q = f(i, j, k);
  return q.mom[c] / q.rho;
}

// 4th-order central difference of velocity component c along axis a
double dvel(const Field3D& f, int c, int a, int i, int j, int k) {
  int p[3] = {i, j, k};
  const auto at = [&](int off) {
    int s[3] = {p[0], p[1], p[2]};
    s[a] += off;
    return vel(f, c, s[0], s[1], s[2]);
  };
  return (-at(2) + 8.0 * at(1) - 8.0 * at(-1) + at(-2)) / (12.0 * f.grid.d(a));
}

}  // namespace

double skewness(const Field3D& f, bool averaged) {
  const GridSpec& g = f.grid;
  const double n = double(g.interior_cells());
  double s = 0.0;
  for (int a = 0; a < 3; ++a) {
    double m2 = 0.0, m3 = 0.0;
    for (int k = 0; k < g.nz; ++k)
      for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
          const double d = dvel(f, a, a, i, j, k);
          m2 += d * d;
          m3 += d * d * d;
        }
    m2 /= n;
    m3 /= n;
    if (m2 > 0.0) s += m3 / std::pow(m2, 1.5);  // quiescent axis contributes 0
  }
  return averaged ? s / 3.0 : s;
}

QField q_criterion(const Field3D& f) {
  const GridSpec& g = f.grid;
  QField out;
  out.q.resize(g.interior_cells());
  out.vel_mag.resize(g.interior_cells());
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        double grad[3][3];
        for (int c = 0; c < 3; ++c)
          for (int a = 0; a < 3; ++a) grad[c][a] = dvel(f, c, a, i, j, k);
        double s2 = 0.0, o2 = 0.0;
        for (int c = 0; c < 3; ++c)
          for (int a = 0; a < 3; ++a) {
            const double sym = 0.5 * (grad[c][a] + grad[a][c]);
            const double ant = 0.5 * (grad[c][a] - grad[a][c]);
            s2 += sym * sym;
            o2 += ant * ant;
          }
        const std::size_t cell = (std::size_t(k) * g.ny + j) * g.nx + i;
        out.q[cell] = 0.5 * (o2 - s2);
        double u2 = 0.0;
        for (int c = 0; c < 3; ++c) {
          const double u = vel(f, c, i, j, k);
          u2 += u * u;
        }
        out.vel_mag[cell] = std::sqrt(u2);
      }
  return out;
}

std::vector<CutRow> line_cut(const Field3D& f, const GasModel& m, int axis, double c1,
                             double c2) {
  const GridSpec& g = f.grid;
  const int t1 = (axis + 1) % 3, t2 = (axis + 2) % 3;
  const auto nearest = [&](int a, double x) {
    if (x < g.origin[a] || x > g.origin[a] + g.length[a])
      throw std::out_of_range("line_cut coordinate outside domain");
    const int i = int(std::floor((x - g.origin[a]) / g.d(a)));
    return std::min(std::max(i, 0), g.n(a) - 1);
  };
  const int j1 = nearest(t1, c1), j2 = nearest(t2, c2);
  std::vector<CutRow> rows(g.n(axis));
  for (int i = 0; i < g.n(axis); ++i) {
    int c[3];
    c[axis] = i;
    c[t1] = j1;
    c[t2] = j2;
    const PrimitiveState p = prim_from_cons(f(c[0], c[1], c[2]), m);
    rows[i] = {g.center(axis, i), p.rho, p.vel[axis], pressure(p)};
  }
  return rows;
}

}  // namespace gks

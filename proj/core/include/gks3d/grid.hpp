#pragma once

#include <vector>

#include "gks3d/state.hpp"

namespace gks {

/// Uniform Cartesian box with three ghost layers per side. Interior indices
/// run over [0, n); ghosts over [-ghost, 0) and [n, n + ghost).
struct GridSpec {
  int nx = 1, ny = 1, nz = 1;
  Vec3 origin{0.0, 0.0, 0.0};
  Vec3 length{1.0, 1.0, 1.0};
  static constexpr int ghost = 3;

  int n(int axis) const { return axis == 0 ? nx : axis == 1 ? ny : nz; }
  double d(int axis) const { return length[axis] / n(axis); }
  Vec3 spacing() const { return {d(0), d(1), d(2)}; }
  double center(int axis, int i) const { return origin[axis] + (i + 0.5) * d(axis); }
  Vec3 cell_center(int i, int j, int k) const {
    return {center(0, i), center(1, j), center(2, k)};
  }
  double cell_volume() const { return d(0) * d(1) * d(2); }
  std::size_t interior_cells() const {
    return std::size_t(nx) * std::size_t(ny) * std::size_t(nz);
  }
  std::size_t padded_cells() const {
    return std::size_t(nx + 2 * ghost) * std::size_t(ny + 2 * ghost) *
           std::size_t(nz + 2 * ghost);
  }
  // x-fastest, matching the checkpoint layout
  std::size_t index(int i, int j, int k) const {
    return (std::size_t(k + ghost) * (ny + 2 * ghost) + std::size_t(j + ghost)) *
               (nx + 2 * ghost) +
           std::size_t(i + ghost);
  }
};

enum class BcType { periodic, symmetry, outflow, isothermal_wall };

struct FaceBc {
  BcType type = BcType::periodic;
  Vec3 wall_velocity{0.0, 0.0, 0.0};
  double wall_temperature = 1.0;
};

struct BoundarySpec {
  FaceBc face[3][2];  // [axis][side], side 0 = low

  static BoundarySpec all_periodic() { return {}; }
  static BoundarySpec all_outflow() {
    BoundarySpec b;
    for (auto& ax : b.face)
      for (auto& f : ax) f.type = BcType::outflow;
    return b;
  }
};

struct Field3D {
  GridSpec grid;
  std::vector<ConservedState> data;

  explicit Field3D(const GridSpec& g) : grid(g), data(g.padded_cells()) {}

  ConservedState& operator()(int i, int j, int k) { return data[grid.index(i, j, k)]; }
  const ConservedState& operator()(int i, int j, int k) const {
    return data[grid.index(i, j, k)];
  }
};

/// Fills all ghost layers, corners included, by sweeping the axes in order
/// (each sweep widens the valid region of the previous ones).
void fill_ghosts(Field3D& f, const BoundarySpec& bc, const GasModel& m);

/// Body-force source (0, rho g, rho u . g).
Vec5 gravity_source(const ConservedState& q, const Vec3& g);

}  // namespace gks

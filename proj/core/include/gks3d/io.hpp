#pragma once

#include <cstdint>
#include <string>

#include "gks3d/diagnostics.hpp"
#include "gks3d/grid.hpp"

namespace gks {

/// Legacy structured-points text file with density and pressure scalars and
/// the velocity vector at cell centers.
void write_vtk(const Field3D& f, const GasModel& m, const std::string& path);

/// Interior conserved field as raw little-endian doubles, 5 per cell
/// (rho, momentum, total energy), x-fastest. Same layout as the checkpoint
/// payload.
void write_raw(const Field3D& f, const std::string& path);

struct Checkpoint {
  static constexpr std::uint32_t kVersion = 1;
  GridSpec grid;
  double time = 0.0;
  std::int64_t step = 0;
  std::uint64_t seed = 0;
};

void write_checkpoint(const Field3D& f, const Checkpoint& meta, const std::string& path);

struct CheckpointData {
  Checkpoint meta;
  Field3D field;
};

/// Reads a checkpoint; the returned field has ghosts unset (call fill_ghosts).
CheckpointData read_checkpoint(const std::string& path);

/// Appending CSV writer for the diagnostics time series.
class DiagnosticsCsv {
 public:
  explicit DiagnosticsCsv(const std::string& path, bool append = false);
  ~DiagnosticsCsv();
  void row(const DiagnosticsRecord& r);

 private:
  void* file_;
};

void write_cut_csv(const std::vector<CutRow>& rows, const std::string& path);

}  // namespace gks

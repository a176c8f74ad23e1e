#include "gks3d/io.hpp"

#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace gks {

namespace {

// Shortest decimal form that round-trips to the same double.
std::string shortest(double x) {
  char buf[32];
  auto r = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, r.ptr);
}

constexpr char kMagic[8] = {'G', 'K', 'S', '3', 'D', 'C', 'K', 'P'};

[[noreturn]] void io_fail(const std::string& what, const std::string& path) {
  throw std::runtime_error(what + ": " + path);
}

void put(std::ostream& out, const void* p, std::size_t n) {
  out.write(static_cast<const char*>(p), std::streamsize(n));
}
template <class T>
void put(std::ostream& out, const T& v) {
  put(out, &v, sizeof(v));
}
template <class T>
void get(std::istream& in, T& v) {
  in.read(reinterpret_cast<char*>(&v), sizeof(v));
}

void write_interior(const Field3D& f, std::ostream& out) {
  const GridSpec& g = f.grid;
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const Vec5 v = f(i, j, k).vec();
        put(out, v.data(), sizeof(double) * 5);
      }
}

}  // namespace

void write_vtk(const Field3D& f, const GasModel& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) io_fail("cannot open for writing", path);
  const GridSpec& g = f.grid;
  char buf[256];
  out << "# vtk DataFile Version 3.0\n"
      << "gks3d field\n"
      << "ASCII\n"
      << "DATASET STRUCTURED_POINTS\n"
      << "DIMENSIONS " << g.nx << " " << g.ny << " " << g.nz << "\n";
  std::snprintf(buf, sizeof(buf), "ORIGIN %.17g %.17g %.17g\n", g.center(0, 0),
                g.center(1, 0), g.center(2, 0));
  out << buf;
  std::snprintf(buf, sizeof(buf), "SPACING %.17g %.17g %.17g\n", g.d(0), g.d(1), g.d(2));
  out << buf;
  out << "POINT_DATA " << g.interior_cells() << "\n";

  const auto scalar_field = [&](const char* name, auto value) {
    out << "SCALARS " << name << " double\nLOOKUP_TABLE default\n";
    for (int k = 0; k < g.nz; ++k)
      for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
          std::snprintf(buf, sizeof(buf), "%.12g\n", value(i, j, k));
          out << buf;
        }
  };
  scalar_field("density", [&](int i, int j, int k) { return f(i, j, k).rho; });
  scalar_field("pressure", [&](int i, int j, int k) {
    return pressure(prim_from_cons(f(i, j, k), m));
  });
  out << "VECTORS velocity double\n";
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const ConservedState& q = f(i, j, k);
        std::snprintf(buf, sizeof(buf), "%.12g %.12g %.12g\n", q.mom[0] / q.rho,
                      q.mom[1] / q.rho, q.mom[2] / q.rho);
        out << buf;
      }
  if (!out) io_fail("write failed", path);
}

void write_raw(const Field3D& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) io_fail("cannot open for writing", path);
  write_interior(f, out);
  if (!out) io_fail("write failed", path);
}

void write_checkpoint(const Field3D& f, const Checkpoint& meta, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) io_fail("cannot open for writing", path);
  const GridSpec& g = f.grid;
  put(out, kMagic, sizeof(kMagic));
  put(out, Checkpoint::kVersion);
  const std::int32_t dims[3] = {g.nx, g.ny, g.nz};
  put(out, dims, sizeof(dims));
  put(out, g.origin.data(), sizeof(double) * 3);
  put(out, g.length.data(), sizeof(double) * 3);
  put(out, meta.time);
  put(out, meta.step);
  put(out, meta.seed);
  write_interior(f, out);
  if (!out) io_fail("write failed", path);
}

CheckpointData read_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) io_fail("cannot open checkpoint", path);
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    io_fail("not a checkpoint file", path);
  std::uint32_t version = 0;
  get(in, version);
  if (version != Checkpoint::kVersion) io_fail("unsupported checkpoint version", path);

  GridSpec g;
  std::int32_t dims[3];
  in.read(reinterpret_cast<char*>(dims), sizeof(dims));
  g.nx = dims[0];
  g.ny = dims[1];
  g.nz = dims[2];
  in.read(reinterpret_cast<char*>(g.origin.data()), sizeof(double) * 3);
  in.read(reinterpret_cast<char*>(g.length.data()), sizeof(double) * 3);

  Checkpoint meta;
  meta.grid = g;
  get(in, meta.time);
  get(in, meta.step);
  get(in, meta.seed);

  CheckpointData data{meta, Field3D(g)};
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        Vec5 v;
        in.read(reinterpret_cast<char*>(v.data()), sizeof(double) * 5);
        data.field(i, j, k) = ConservedState::from_vec(v);
      }
  if (!in) io_fail("truncated checkpoint", path);
  return data;
}

DiagnosticsCsv::DiagnosticsCsv(const std::string& path, bool append) {
  std::FILE* f = std::fopen(path.c_str(), append ? "a" : "w");
  if (!f) io_fail("cannot open for writing", path);
  file_ = f;
  if (!append)
    std::fputs("time,e_k,rho_rms,s_u,rho_min,rho_max,p_min,p_max\n", f);
}

DiagnosticsCsv::~DiagnosticsCsv() {
  if (file_) std::fclose(static_cast<std::FILE*>(file_));
}

void DiagnosticsCsv::row(const DiagnosticsRecord& r) {
  const double v[8] = {r.time, r.e_k,    r.rho_rms, r.s_u,
                       r.rho_min, r.rho_max, r.p_min,   r.p_max};
  std::string line;
  for (int i = 0; i < 8; ++i) {
    if (i) line += ',';
    line += shortest(v[i]);
  }
  line += '\n';
  std::fputs(line.c_str(), static_cast<std::FILE*>(file_));
  std::fflush(static_cast<std::FILE*>(file_));
}

void write_cut_csv(const std::vector<CutRow>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) io_fail("cannot open for writing", path);
  out << "coord,rho,u,p\n";
  for (const CutRow& r : rows) {
    out << shortest(r.coord) << ',' << shortest(r.rho) << ',' << shortest(r.u)
        << ',' << shortest(r.p) << '\n';
  }
}

}  // namespace gks

#include "gks3d/driver.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <memory>
#include <ostream>

#include "gks3d/io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gks {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

GridSpec case_grid(const RunConfig& cfg) {
  GridSpec g;
  int def = 32;
  if (cfg.case_id == "sod3d") {
    g.origin = {0, 0, 0};
    g.length = {1, 1, 1};
    def = 64;
  } else if (cfg.case_id == "rayleigh_taylor") {
    g.origin = {0, 0, 0};
    g.length = {0.25, 0.25, 1.0};
    g.nx = g.ny = 16;
    g.nz = 64;
    if (cfg.nx > 0) g.nx = cfg.nx;
    if (cfg.ny > 0) g.ny = cfg.ny;
    if (cfg.nz > 0) g.nz = cfg.nz;
    return g;
  } else if (cfg.case_id == "cavity") {
    g.origin = {-0.5, -0.5, -0.5};
    g.length = {1, 1, 1};
    def = 33;
  } else if (cfg.case_id == "tgv") {
    g.origin = {-kPi, -kPi, -kPi};
    g.length = {2 * kPi, 2 * kPi, 2 * kPi};
    def = 32;
  } else if (cfg.case_id == "hit") {
    g.origin = {-kPi, -kPi, -kPi};
    g.length = {2 * kPi, 2 * kPi, 2 * kPi};
    def = 64;
  } else {
    throw std::runtime_error("unknown case id '" + cfg.case_id + "'");
  }
  g.nx = cfg.nx > 0 ? cfg.nx : def;
  g.ny = cfg.ny > 0 ? cfg.ny : def;
  g.nz = cfg.nz > 0 ? cfg.nz : def;
  return g;
}

CaseSetup build_case(const RunConfig& cfg) {
  const GridSpec g = case_grid(cfg);
  if (cfg.case_id == "sod3d") return init_sod3d(g);
  if (cfg.case_id == "rayleigh_taylor") return init_rayleigh_taylor(g, cfg.params);
  if (cfg.case_id == "cavity") return init_cavity(g, cfg.params);
  if (cfg.case_id == "tgv") return init_tgv(g, cfg.params);
  if (cfg.case_id == "hit") return init_hit(g, cfg.params);
  throw std::runtime_error("unknown case id '" + cfg.case_id + "'");
}

ReconConfig recon_config(const RunConfig& cfg) {
  ReconConfig r;
  r.mode = cfg.mode;
  r.projection = cfg.projection;
  r.weno_epsilon = cfg.weno_epsilon;
  r.positivity_fallback = cfg.positivity_fallback;
  return r;
}

int run(const RunConfig& cfg, std::ostream& log) {
#ifdef _OPENMP
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
#endif
  namespace fs = std::filesystem;
  fs::create_directories(cfg.output_dir);
  const auto path = [&](const std::string& name) { return cfg.output_dir + "/" + name; };

  CaseSetup setup = build_case(cfg);
  const SolverConfig solver = setup.solver(recon_config(cfg), cfg.cfl);
  const double t_end = cfg.t_end > 0.0 ? cfg.t_end : setup.t_end;

  double t = 0.0;
  std::int64_t step_no = 0;
  if (!cfg.restart_from.empty()) {
    CheckpointData ck = read_checkpoint(cfg.restart_from);
    const GridSpec& a = ck.meta.grid;
    const GridSpec& b = setup.field.grid;
    if (a.nx != b.nx || a.ny != b.ny || a.nz != b.nz)
      throw std::runtime_error("checkpoint grid does not match the configured case");
    setup.field = ck.field;
    t = ck.meta.time;
    step_no = ck.meta.step;
  }

  DiagnosticsCsv csv(path("diagnostics.csv"), !cfg.restart_from.empty());
  int field_no = 0;
  double next_field = cfg.field_interval > 0.0
                          ? (std::floor(t / cfg.field_interval) + 1.0) * cfg.field_interval
                          : -1.0;

  const auto diagnose = [&](const StepStats* st) {
    DiagnosticsRecord r;
    r.time = t;
    r.e_k = kinetic_energy(setup.field);
    r.rho_rms = density_rms(setup.field);
    if (solver.bc.face[0][0].type == BcType::periodic) {
      fill_ghosts(setup.field, solver.bc, solver.gas);
      r.s_u = skewness(setup.field);
    }
    if (st) {
      r.rho_min = st->rho_min;
      r.rho_max = st->rho_max;
      r.p_min = st->p_min;
      r.p_max = st->p_max;
    }
    csv.row(r);
  };

  if (step_no == 0) diagnose(nullptr);

  const auto wall0 = std::chrono::steady_clock::now();
  long fallbacks = 0;
  std::int64_t steps_done = 0;
  try {
    while (t < t_end * (1.0 - 1e-12)) {
      double dt = compute_dt(setup.field, solver);
      if (t + dt > t_end) dt = t_end - t;
      const StepStats st = step(setup.field, solver, dt);
      t += st.dt;
      ++step_no;
      ++steps_done;
      fallbacks += st.fallbacks;

      if (step_no % cfg.diag_every == 0) diagnose(&st);
      if (next_field > 0.0 && t >= next_field * (1.0 - 1e-12)) {
        char name[64];
        std::snprintf(name, sizeof(name), "field_%04d.vtk", ++field_no);
        write_vtk(setup.field, solver.gas, path(name));
        next_field += cfg.field_interval;
      }
      if (cfg.checkpoint_every > 0 && step_no % cfg.checkpoint_every == 0) {
        Checkpoint meta;
        meta.grid = setup.field.grid;
        meta.time = t;
        meta.step = step_no;
        meta.seed = cfg.params.seed;
        char name[64];
        std::snprintf(name, sizeof(name), "checkpoint_%08lld.bin",
                      static_cast<long long>(step_no));
        write_checkpoint(setup.field, meta, path(name));
      }
    }
  } catch (const InvalidStateError& e) {
    log << "solver failure at t = " << t << ", step " << step_no << ": " << e.what()
        << "\n";
    return 1;
  }

  write_vtk(setup.field, solver.gas, path("field_final.vtk"));
  {
    Checkpoint meta;
    meta.grid = setup.field.grid;
    meta.time = t;
    meta.step = step_no;
    meta.seed = cfg.params.seed;
    write_checkpoint(setup.field, meta, path("checkpoint_final.bin"));
  }
  if (cfg.case_id == "sod3d") {
    const double eps = 0.5 * setup.field.grid.d(1);
    write_cut_csv(line_cut(setup.field, solver.gas, 0, eps, eps), path("cut_x.csv"));
  }

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();
  const double cell_steps =
      double(setup.field.grid.interior_cells()) * double(steps_done);
  log << "case " << cfg.case_id << ": " << steps_done << " steps to t = " << t << " in "
      << wall << " s";
  if (wall > 0.0 && steps_done > 0) log << " (" << cell_steps / wall << " cell-steps/s)";
  if (fallbacks > 0) log << ", " << fallbacks << " positivity fallbacks";
  log << "\n";
  return 0;
}

}  // namespace gks

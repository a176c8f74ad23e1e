// Microbenchmarks for the hot kernels: per-point WENO reconstruction, the
// interface flux assembly/evaluation, and whole solver steps.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "gks3d/cases.hpp"
#include "gks3d/flux.hpp"
#include "gks3d/integrator.hpp"
#include "gks3d/reconstruction.hpp"

using namespace gks;

namespace {

GaussPointRecon random_recon(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> pos(0.6, 1.6);
  const GasModel m = GasModel::inviscid(1.4);
  GaussPointRecon r;
  for (int side = 0; side < 2; ++side) {
    const PrimitiveState p{pos(rng), {0.4 * u(rng), 0.4 * u(rng), 0.4 * u(rng)}, pos(rng)};
    r.q[side] = cons_from_prim(p, m).vec();
    for (int d = 0; d < 3; ++d)
      for (int c = 0; c < 5; ++c) r.slope[side][d][c] = 0.3 * u(rng);
  }
  r.q[2] = 0.5 * (r.q[0] + r.q[1]);
  for (int d = 0; d < 3; ++d)
    for (int c = 0; c < 5; ++c) r.slope[2][d][c] = 0.3 * u(rng);
  return r;
}

void bm_weno_point(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.5, 1.5);
  double f[5];
  for (double& v : f) v = u(rng);
  for (auto _ : state) {
    const LinePoint lp = weno5_value_slope(f, 0.01, 0);
    benchmark::DoNotOptimize(lp);
    f[2] += 1e-12;  // defeat caching of the weights
  }
}
BENCHMARK(bm_weno_point);

void bm_flux_assemble(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const GasModel m = GasModel::inviscid(1.4);
  const GaussPointRecon r = random_recon(rng);
  for (auto _ : state) {
    const GaussFlux g = assemble_interface(r, m, 5e-3);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(bm_flux_assemble);

void bm_flux_integrate(benchmark::State& state) {
  std::mt19937_64 rng(13);
  const GasModel m = GasModel::inviscid(1.4);
  const double dt = 5e-3;
  GaussFlux pts[4];
  for (auto& g : pts) g = assemble_interface(random_recon(rng), m, dt);
  for (auto _ : state) {
    const FaceFluxPair p = face_flux_integrals(pts, m, dt, 1.0);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(bm_flux_integrate);

void bm_step(benchmark::State& state) {
  const int n = int(state.range(0));
  GridSpec g;
  g.nx = g.ny = g.nz = n;
  g.length = {2 * M_PI, 2 * M_PI, 2 * M_PI};
  CaseParams p;
  CaseSetup cs = init_tgv(g, p);
  const SolverConfig cfg = cs.solver(ReconConfig{});
  for (auto _ : state) {
    const StepStats st = step(cs.field, cfg);
    benchmark::DoNotOptimize(st);
  }
  state.SetItemsProcessed(state.iterations() * int64_t(n) * n * n);
  state.counters["cell_steps_per_s"] =
      benchmark::Counter(double(state.iterations()) * n * n * n, benchmark::Counter::kIsRate);
}
BENCHMARK(bm_step)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

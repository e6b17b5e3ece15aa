#include <benchmark/benchmark.h>

#include <vector>

#include "rotflow/boundary_layer.hpp"
#include "rotflow/burgers.hpp"
#include "rotflow/subsolution.hpp"
#include "rotflow/test_fields.hpp"
#include "rotflow/tridiagonal.hpp"
#include "rotflow/viscosity.hpp"
#include "rotflow/weakform.hpp"

using namespace rotflow;

namespace {

const AnnulusGeometry kGeom{};

void BM_GodunovSolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(godunov_solve(kGeom, 0.1, 0.5, n));
}
BENCHMARK(BM_GodunovSolve)->RangeMultiplier(2)->Range(800, 12800)->Unit(benchmark::kMillisecond);

void BM_TridiagonalSolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  TridiagonalMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a.lower[i] = -1.0;
    a.diag[i] = 4.0;
    a.upper[i] = -1.0;
  }
  const std::vector<double> rhs(n, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_tridiagonal(a, rhs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TridiagonalSolve)->Range(1 << 8, 1 << 16);

void BM_CrankNicolson(benchmark::State& state) {
  ParabolicProblem p;
  p.geom = kGeom;
  p.viscosity = 1e-3;
  p.n_intervals = static_cast<std::size_t>(state.range(0));
  p.dt = 1e-3;
  const double t_out[] = {1.0};
  for (auto _ : state) benchmark::DoNotOptimize(solve_parabolic(p, t_out));
}
BENCHMARK(BM_CrankNicolson)->Arg(250)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_ITerms(benchmark::State& state) {
  const CutoffField w = build_w_eps(kGeom, default_stream_function(kGeom), build_chi(), 1.0 / state.range(0));
  const HolderField v = default_holder_field(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(compute_I_terms(v, w, 0.0));
}
BENCHMARK(BM_ITerms)->Arg(25)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_WeakResidual(benchmark::State& state) {
  const SubsolutionParams params{};
  const RotationalSubsolution sub(kGeom, params);
  const auto fields = vector_test_library(kGeom, params.lambda);
  const VectorTestField& phi = fields[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(weak_residual_linear_system(sub, phi));
}
BENCHMARK(BM_WeakResidual)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_ConstraintSweep(benchmark::State& state) {
  const RotationalSubsolution sub(kGeom, SubsolutionParams{});
  for (auto _ : state) benchmark::DoNotOptimize(check_constraint_structure(sub, SampleGrid{}));
}
BENCHMARK(BM_ConstraintSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "pseudoboson/coherent.hpp"
#include "pseudoboson/diagnostics.hpp"
#include "pseudoboson/fock.hpp"
#include "pseudoboson/matrix_exp.hpp"
#include "pseudoboson/polynomial.hpp"
#include "pseudoboson/quadrature.hpp"
#include "pseudoboson/system.hpp"
#include "pseudoboson/wavefunction.hpp"

namespace pb = pseudoboson;
using pb::cplx;

namespace {

pb::SystemPtr cosine() { return pb::make_system(pb::Family::CosinePerturbed, cplx(0.0, 0.5)); }

void BM_PolynomialFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pb::build_pn_family(cplx(1.0, 0.3), n));
}
BENCHMARK(BM_PolynomialFamily)->Arg(10)->Arg(25)->Arg(40);

void BM_SamplePhiFamily(benchmark::State& state) {
  const auto sys = cosine();
  const auto grid = pb::real_line_grid(12.0, 32);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pb::sample_phi_family(*sys, n, grid.nodes));
}
BENCHMARK(BM_SamplePhiFamily)->Arg(15)->Arg(40);

void BM_GramMatrix(benchmark::State& state) {
  const auto sys = cosine();
  const auto grid = pb::real_line_grid(12.0, 32);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pb::gram_matrix(*sys, n, grid));
}
BENCHMARK(BM_GramMatrix)->Arg(15)->Arg(40);

void BM_ResolutionCheck(benchmark::State& state) {
  const auto sys = cosine();
  const auto grid = pb::real_line_grid(12.0, 32);
  const auto disk = pb::disk_grid(6.0, 48, 128);
  const auto f = pb::phi_n(sys, 1).sample(grid.nodes);
  for (auto _ : state)
    benchmark::DoNotOptimize(pb::resolution_check(*sys, pb::ResolutionKind::PhiPsi, f, f, disk, grid));
}
BENCHMARK(BM_ResolutionCheck)->Unit(benchmark::kMillisecond);

void BM_Expm(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto l = pb::fock_ladders(dim);
  const Eigen::MatrixXcd m = cplx(0.7, 0.2) * l.a_dag - cplx(0.7, -0.2) * l.a;
  for (auto _ : state) benchmark::DoNotOptimize(pb::expm(m));
}
BENCHMARK(BM_Expm)->Arg(64)->Arg(128);

void BM_DisplacedVectors(benchmark::State& state) {
  const auto sys = pb::displaced_system(1.0, 0.0, 64);
  for (auto _ : state) benchmark::DoNotOptimize(pb::displaced_vectors(sys, 30));
}
BENCHMARK(BM_DisplacedVectors);

}  // namespace

BENCHMARK_MAIN();

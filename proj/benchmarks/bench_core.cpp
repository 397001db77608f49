#include <benchmark/benchmark.h>

#include <map>
#include <set>

#include "dtop/dpath.hpp"
#include "dtop/precubical.hpp"
#include "dtop/reparam.hpp"
#include "dtop/spatial.hpp"

using namespace dtop;

namespace {

PrecubicalSet doubled_cube() {
  const PrecubicalSet cube = standard_cube(3);
  const PrecubicalSet boundary = boundary_cube(3);
  std::set<CellId> A;
  std::map<CellId, CellId> inclusion;
  for (const auto& [id, cell] : boundary.cells()) {
    A.insert(id);
    inclusion[id] = id;
  }
  return pushout(cube, A, inclusion, cube).set;
}

TameDPath sample_path() {
  Leg hold{"*0", "0", "1", {{rat(0), {rat(0)}}, {rat(1), {rat(0)}}, {rat(3), {rat(1)}}}};
  Leg diag{"1*", "0", "1", {{rat(0), {rat(0)}}, {rat(1, 2), {rat(1, 4)}}, {rat(2), {rat(1)}}}};
  return canonicalize(TameDPath{{hold, diag}});
}

void BM_FactorizeRoundTrip(benchmark::State& state) {
  const TameDPath path = sample_path();
  for (auto _ : state) {
    const Factorization fac = factorize(path);
    benchmark::DoNotOptimize(apply_factorization(fac.profile, fac.natural));
  }
}
BENCHMARK(BM_FactorizeRoundTrip);

void BM_ComposeReparam(benchmark::State& state) {
  const Reparam f = Reparam::from_breakpoints(
      {{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(3, 2), rat(1)}, {rat(2), rat(3)}});
  const Reparam g = Reparam::from_breakpoints(
      {{rat(0), rat(0)}, {rat(1), rat(2)}, {rat(2), rat(2)}, {rat(3), rat(5)}});
  for (auto _ : state) benchmark::DoNotOptimize(compose(f, g));
}
BENCHMARK(BM_ComposeReparam);

void BM_EnumerateChains(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PrecubicalSet K = standard_cube(n);
  const CellId bottom(static_cast<std::size_t>(n), '0');
  const CellId top(static_cast<std::size_t>(n), '1');
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_skeletons(K, bottom, top, n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateChains)->Arg(2)->Arg(3)->Arg(4);

void BM_InB3Boundary(benchmark::State& state) {
  const BoundarySubcomplex A = BoundarySubcomplex::full_boundary(3);
  for (auto _ : state) benchmark::DoNotOptimize(in_Bn(A));
}
BENCHMARK(BM_InB3Boundary);

void BM_SpatialDoubledCube(benchmark::State& state) {
  const PrecubicalSet K = doubled_cube();
  for (auto _ : state) benchmark::DoNotOptimize(is_spatial(K));
}
BENCHMARK(BM_SpatialDoubledCube);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}

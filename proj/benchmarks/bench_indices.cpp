#include <benchmark/benchmark.h>

#include "weylindex/indices.hpp"

using namespace weylindex;

namespace {

RootSystem group(char letter, int rank) { return build_root_system({{letter, rank}}, 0); }

void BM_ApplyD(benchmark::State& state) {
  const char letters[] = {'A', 'B', 'G'};
  auto rs = group(letters[state.range(0)], state.range(0) == 0 ? 3 : 2);
  auto f = build_F(rs);
  for (auto _ : state) benchmark::DoNotOptimize(apply_D(rs, f));
  state.SetLabel(rs.describe());
}
BENCHMARK(BM_ApplyD)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_OrbitHull(benchmark::State& state) {
  auto rs = group('B', 3);
  WeightVector lambda{1, 2, 1};
  auto lattice = LatticeSpec::simply_connected(rs);
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(weyl_orbit(rs, lambda), lattice));
}
BENCHMARK(BM_OrbitHull)->Unit(benchmark::kMillisecond);

void BM_Degree(benchmark::State& state) {
  auto rs = group('B', 2);
  auto lattice = LatticeSpec::simply_connected(rs);
  const auto method = state.range(0) ? IntegrationMethod::polarization : IntegrationMethod::monomial;
  for (auto _ : state) benchmark::DoNotOptimize(degree(rs, lattice, {{1, 1}}, method));
  state.SetLabel(to_string(method));
}
BENCHMARK(BM_Degree)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ChernDirectVsFlag(benchmark::State& state) {
  auto rs = group('A', 2);
  auto lattice = LatticeSpec::adjoint(rs);
  std::vector<WeightVector> lambda{{2, 2}};
  for (auto _ : state) {
    if (state.range(0))
      benchmark::DoNotOptimize(chern_index_flag_path(rs, lattice, lambda, 2));
    else
      benchmark::DoNotOptimize(chern_index(rs, lattice, lambda, 2));
  }
  state.SetLabel(state.range(0) ? "flag" : "direct");
}
BENCHMARK(BM_ChernDirectVsFlag)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Euler(benchmark::State& state) {
  auto rs = group('A', 3);
  auto lattice = LatticeSpec::simply_connected(rs);
  for (auto _ : state) benchmark::DoNotOptimize(euler_characteristic(rs, lattice, {{1, 0, 1}}));
}
BENCHMARK(BM_Euler)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();

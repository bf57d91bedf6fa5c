// Serial reference against the OpenMP kernels. Arg: corner count of a random domain with 3 holes.
#include <benchmark/benchmark.h>

#include "geodiam/approx.hpp"
#include "geodiam/fixtures.hpp"
#include "geodiam/spm.hpp"

using namespace geodiam;

namespace {

PolygonalDomain domain_of(int n) { return validate_domain(random_domain(42, n, 3)); }

template <Exec E>
void BM_VisibilityGraph(benchmark::State& st) {
  auto dom = domain_of(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(build_visibility_graph(dom, {}, E));
}

template <Exec E>
void BM_CornerDistances(benchmark::State& st) {
  auto g = build_visibility_graph(domain_of(static_cast<int>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(corner_distances(g, {}, E));
}

template <Exec E>
void BM_Farthest(benchmark::State& st) {
  auto dom = domain_of(static_cast<int>(st.range(0)));
  auto table = corner_distances(build_visibility_graph(dom));
  FarthestOptions opt;
  opt.exec = E;
  for (auto _ : st) benchmark::DoNotOptimize(farthest_point(dom, table, dom.corners[0], {}, opt));
}

template <Exec E>
void BM_GridApprox(benchmark::State& st) {
  auto dom = domain_of(static_cast<int>(st.range(0)));
  auto table = corner_distances(build_visibility_graph(dom));
  for (auto _ : st) benchmark::DoNotOptimize(grid_approx(dom, table, 0.5, {}, E));
}

template <Exec E>
void BM_GridOracle(benchmark::State& st) {
  auto dom = domain_of(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(oracle_diameter(GridOracle(dom, 32, E)));
}

}  // namespace

BENCHMARK(BM_VisibilityGraph<Exec::Serial>)->Arg(24)->Arg(60);
BENCHMARK(BM_VisibilityGraph<Exec::Parallel>)->Arg(24)->Arg(60);
BENCHMARK(BM_CornerDistances<Exec::Serial>)->Arg(24)->Arg(60);
BENCHMARK(BM_CornerDistances<Exec::Parallel>)->Arg(24)->Arg(60);
BENCHMARK(BM_Farthest<Exec::Serial>)->Arg(24)->Arg(60);
BENCHMARK(BM_Farthest<Exec::Parallel>)->Arg(24)->Arg(60);
BENCHMARK(BM_GridApprox<Exec::Serial>)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridApprox<Exec::Parallel>)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridOracle<Exec::Serial>)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridOracle<Exec::Parallel>)->Arg(24)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

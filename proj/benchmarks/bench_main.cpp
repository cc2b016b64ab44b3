#include <benchmark/benchmark.h>

#include "fanomirror/catalog.hpp"
#include "fanomirror/frobenius.hpp"
#include "fanomirror/grassmannian.hpp"

namespace {

void BM_PlanePeriods(benchmark::State& state) {
  const auto& mirror = fano::catalog_entry("p2").mirror;
  for (auto _ : state) benchmark::DoNotOptimize(fano::classical_periods(mirror, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_PlanePeriods)->Arg(15)->Arg(30)->Arg(60);

void BM_ThreefoldPeriods(benchmark::State& state) {
  const auto& mirror = fano::catalog_entry("p3").mirror;
  for (auto _ : state) benchmark::DoNotOptimize(fano::classical_periods(mirror, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_ThreefoldPeriods)->Arg(12)->Arg(24);

void BM_GrassPeriods(benchmark::State& state) {
  fano::BoxContext ctx(2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(fano::grass_periods(ctx, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_GrassPeriods)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_FlowPolynomials(benchmark::State& state) {
  fano::BoxContext ctx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  fano::GridNetwork net = fano::build_rectangles_network(ctx);
  auto diagrams = fano::all_diagrams(ctx);
  for (auto _ : state) {
    for (const auto& lambda : diagrams) benchmark::DoNotOptimize(fano::flow_polynomial(net, lambda));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(diagrams.size()));
}
BENCHMARK(BM_FlowPolynomials)->Args({2, 5})->Args({3, 6})->Unit(benchmark::kMillisecond);

void BM_Superpotential(benchmark::State& state) {
  fano::BoxContext ctx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(fano::superpotential_chart(ctx));
}
BENCHMARK(BM_Superpotential)->Args({2, 4})->Args({3, 6})->Unit(benchmark::kMillisecond);

fano::PeriodSequence plane_periods(int order) {
  const auto& entry = fano::catalog_entry("p2");
  return {fano::classical_periods(entry.mirror, static_cast<unsigned>(order)), entry.fano_index};
}

void BM_ReconstructN1(benchmark::State& state) {
  auto periods = plane_periods(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fano::reconstruct_n1(periods));
}
BENCHMARK(BM_ReconstructN1)->Arg(12)->Arg(30);

void BM_StructureTable(benchmark::State& state) {
  int max_p = static_cast<int>(state.range(0));
  auto periods = plane_periods(3 * max_p + 3);
  for (auto _ : state) {
    auto series = fano::theta_series_from_periods(periods, max_p);
    benchmark::DoNotOptimize(fano::structure_table(series, max_p));
  }
}
BENCHMARK(BM_StructureTable)->Arg(4)->Arg(8);

}  // namespace
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "mixcut/bench.hpp"
#include "mixcut/blp.hpp"
#include "mixcut/families.hpp"
#include "mixcut/hull.hpp"

using namespace mixcut;

namespace {

void BM_EnumerateFacets(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto inst = benchmark_instance(Example::K, m, m / 2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_facets(inst));
}
BENCHMARK(BM_EnumerateFacets)->DenseRange(4, 9)->Unit(benchmark::kMillisecond);

void BM_MemberOf(benchmark::State& state) {
  const auto family = static_cast<Family>(state.range(0));
  const auto inst = benchmark_instance(Example::L, 8, 5);
  const auto facets = enumerate_facets(inst).nonvertical;
  for (auto _ : state) {
    for (const auto& f : facets) benchmark::DoNotOptimize(member_of(inst, f, family));
  }
  state.SetLabel(family_name(family));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(facets.size()));
}
BENCHMARK(BM_MemberOf)
    ->Arg(static_cast<int>(Family::Zhao))
    ->Arg(static_cast<int>(Family::BlpUniform))
    ->Arg(static_cast<int>(Family::BlpGeneric))
    ->Unit(benchmark::kMillisecond);

void BM_Coverage(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coverage(Example::L, m, m - 3));
}
BENCHMARK(BM_Coverage)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_AggregateSubstitute(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto inst = benchmark_instance(Example::L, m, m / 2);
  const auto S = build_sc(inst);
  BlpAssignment a;
  a.base_k = 2 * m;  // z y_1 >= h_1 y_1
  a.base_j = 0;
  a.K_sets.assign(m + 1, {});
  a.T_sets.assign(m + 1, {});
  for (int j = 1; j <= m; ++j) a.K_sets[j].push_back({2 * m + j - 1, Rational(1)});
  a.r0_up = Policy::All;
  a.r0_down = Policy::All;
  for (auto _ : state) benchmark::DoNotOptimize(substitute(S, aggregate(S, a), a));
}
BENCHMARK(BM_AggregateSubstitute)->DenseRange(4, 10, 2);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "pfw/pfw.hpp"

namespace {

pfw::FramePtr bench_frame(std::int64_t ji) {
  pfw::Rng rng(static_cast<std::uint64_t>(ji) * 7919);
  return pfw::frame_from_poset(pfw::random_poset(rng, static_cast<std::size_t>(ji)));
}

void BM_CongruenceFrame(benchmark::State& state) {
  auto l = bench_frame(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pfw::congruence_frame(l, 0));
  state.counters["elements"] = static_cast<double>(l->size());
}
BENCHMARK(BM_CongruenceFrame)->DenseRange(2, 8, 2);

void BM_CongruenceClosure(benchmark::State& state) {
  auto l = bench_frame(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pfw::congruence_frame_by_closure(l));
}
BENCHMARK(BM_CongruenceClosure)->DenseRange(2, 5);

void BM_Coproduct(benchmark::State& state) {
  auto a = pfw::make_frith(pfw::chain_frame(static_cast<std::size_t>(state.range(0))));
  auto b = pfw::make_frith(pfw::diamond_frame());
  for (auto _ : state) benchmark::DoNotOptimize(pfw::coproduct(a, b));
}
BENCHMARK(BM_Coproduct)->DenseRange(2, 5);

void BM_CIdealCompose(benchmark::State& state) {
  auto l = pfw::boolean_frame(static_cast<std::size_t>(state.range(0)));
  auto e = pfw::e_r(l, l->ji(0));
  auto f = pfw::inverse(e);
  for (auto _ : state) benchmark::DoNotOptimize(pfw::compose(e, f));
}
BENCHMARK(BM_CIdealCompose)->DenseRange(1, 5);

void BM_FilterFromSublattice(benchmark::State& state) {
  auto l = pfw::boolean_frame(static_cast<std::size_t>(state.range(0)));
  auto r = l->join_irreducibles();
  for (auto _ : state) benchmark::DoNotOptimize(pfw::filter_from_sublattice(l, r));
}
BENCHMARK(BM_FilterFromSublattice)->DenseRange(1, 4);

void BM_PervinTd(benchmark::State& state) {
  pfw::Rng rng(42);
  auto x = pfw::random_pervin(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pfw::td_suite(x));
}
BENCHMARK(BM_PervinTd)->DenseRange(2, 4);

void BM_Completeness(benchmark::State& state) {
  auto frames = pfw::frame_catalog(4);
  auto catalog = pfw::frith_catalog(frames);
  auto f = pfw::make_frith(pfw::chain_frame(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(pfw::completeness_suite(f, catalog));
}
BENCHMARK(BM_Completeness)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();

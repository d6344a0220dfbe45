#include <benchmark/benchmark.h>

#include <vector>

#include "ellip/bounds.hpp"
#include "ellip/elliptic.hpp"
#include "ellip/family_spec.hpp"
#include "ellip/grid.hpp"
#include "ellip/verify.hpp"

namespace {

void BM_CompleteKE(benchmark::State& state) {
  const auto rs = ellip::uniform_grid(0.01, 0.99, 1000);
  for (auto _ : state) {
    for (double r : rs) benchmark::DoNotOptimize(ellip::complete_ke(ellip::Modulus(r)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(rs.size()));
}
BENCHMARK(BM_CompleteKE);

void BM_CompleteENearOne(benchmark::State& state) {
  const auto m = ellip::Modulus::from_complement(1e-12);
  for (auto _ : state) benchmark::DoNotOptimize(ellip::complete_e(m));
}
BENCHMARK(BM_CompleteENearOne);

void BM_BestEnclosure(benchmark::State& state) {
  const auto fams = ellip::sharp_families();
  const ellip::Modulus m(0.9);
  for (auto _ : state) benchmark::DoNotOptimize(ellip::best_enclosure(m, fams));
}
BENCHMARK(BM_BestEnclosure);

void BM_ValiditySweep(benchmark::State& state) {
  const auto fams = ellip::sharp_families();
  const auto points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ellip::validity_sweep(fams, points));
}
BENCHMARK(BM_ValiditySweep)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_MonotoneSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ellip::sweep_monotone("lemma23.g", 10000));
}
BENCHMARK(BM_MonotoneSweep)->Unit(benchmark::kMillisecond);

void BM_Crossover(benchmark::State& state) {
  const auto a = ellip::parse_family("cor31-upper");
  const auto b = ellip::parse_family("alzer-qiu");
  for (auto _ : state) benchmark::DoNotOptimize(ellip::find_crossover(a, b));
}
BENCHMARK(BM_Crossover)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

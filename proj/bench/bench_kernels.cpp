#include <benchmark/benchmark.h>

#include "sspkit/conjugacy.hpp"
#include "sspkit/symbols.hpp"

namespace {

void BM_BfsSerial(benchmark::State& state) {
  const auto desc = ssp::ssp_class(ssp::WeylType::B(static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(ssp::min_length_search_serial(desc));
}

void BM_BfsParallel(benchmark::State& state) {
  const auto desc = ssp::ssp_class(ssp::WeylType::B(static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(ssp::min_length_search(desc));
}

void BM_AlphaSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        ssp::max_alpha_certificate_serial(ssp::ClassicalFamily::B, static_cast<unsigned>(state.range(0))));
}

void BM_AlphaParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(ssp::max_alpha_certificate(ssp::ClassicalFamily::B, static_cast<unsigned>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_BfsSerial)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BfsParallel)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlphaSerial)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlphaParallel)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <vector>

#include "mfs/census.hpp"
#include "mfs/sampling.hpp"
#include "support/oracles.hpp"

namespace {

const mfs::Graph& sampling_graph() {
  static const mfs::Graph g = mfs::testing::erdos_renyi(20'000, 100'000, 1);
  return g;
}

const mfs::Graph& census_graph() {
  static const mfs::Graph g = mfs::testing::erdos_renyi(2'000, 8'000, 2);
  return g;
}

constexpr std::uint64_t kDraws = 200'000;

void BM_SampleSerial(benchmark::State& state) {
  const auto kind = static_cast<mfs::FrameKind>(state.range(0));
  mfs::FrameSampler sampler(sampling_graph(), kind);
  const auto& table = mfs::arrcode({4, false});
  auto rng = mfs::make_stream(1, 0, 0);
  for (auto _ : state) {
    mfs::SampleAccumulator acc(kind, {4, false});
    mfs::sample_serial(sampler, table, kDraws, rng, acc);
    benchmark::DoNotOptimize(acc.detections.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kDraws));
}

void BM_SampleParallel(benchmark::State& state) {
  const auto kind = static_cast<mfs::FrameKind>(state.range(0));
  const auto workers = static_cast<std::size_t>(state.range(1));
  mfs::FrameSampler sampler(sampling_graph(), kind);
  const auto& table = mfs::arrcode({4, false});
  std::vector<mfs::Rng> streams;
  for (std::size_t w = 0; w < workers; ++w) streams.push_back(mfs::make_stream(1, 0, w));
  for (auto _ : state) {
    mfs::SampleAccumulator acc(kind, {4, false});
    mfs::sample_parallel(sampler, table, kDraws, streams, acc);
    benchmark::DoNotOptimize(acc.detections.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kDraws));
}

void BM_CensusSerial(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mfs::exact_census_serial(census_graph(), size).total());
}

void BM_CensusParallel(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(mfs::exact_census(census_graph(), size, workers).total());
}

constexpr int kChain = static_cast<int>(mfs::FrameKind::Chain);
constexpr int kTrident = static_cast<int>(mfs::FrameKind::Trident);

}  // namespace

BENCHMARK(BM_SampleSerial)->Arg(kChain)->Arg(kTrident)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleParallel)
    ->ArgsProduct({{kChain, kTrident}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_CensusSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->ArgsProduct({{3, 4}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

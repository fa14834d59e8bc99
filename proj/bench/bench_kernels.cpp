#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mayan/batch.hpp"

namespace {

std::vector<std::int64_t> random_days(std::size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(0, (std::int64_t{1} << 40) - 1);
  std::vector<std::int64_t> days(n);
  for (auto& d : days) d = dist(rng);
  return days;
}

void BM_DayRecordsSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mayan::serial::day_records(0, state.range(0)));
}
void BM_DayRecordsParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mayan::parallel::day_records(0, state.range(0)));
}
BENCHMARK(BM_DayRecordsSerial)->Arg(18980)->Arg(1 << 20);
BENCHMARK(BM_DayRecordsParallel)->Arg(18980)->Arg(1 << 20);

void BM_DistinctPairsSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mayan::serial::count_distinct_cr_pairs(0, state.range(0)));
}
void BM_DistinctPairsParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mayan::parallel::count_distinct_cr_pairs(0, state.range(0)));
}
BENCHMARK(BM_DistinctPairsSerial)->Arg(18980 * 50);
BENCHMARK(BM_DistinctPairsParallel)->Arg(18980 * 50);

void BM_CrInverseSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mayan::serial::cr_inverse_failures(0, 18980));
}
void BM_CrInverseParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mayan::parallel::cr_inverse_failures(0, 18980));
}
BENCHMARK(BM_CrInverseSerial);
BENCHMARK(BM_CrInverseParallel);

void BM_LcRoundTripSerial(benchmark::State& state) {
  const auto days = random_days(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mayan::serial::lc_round_trip_failures(days));
}
void BM_LcRoundTripParallel(benchmark::State& state) {
  const auto days = random_days(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mayan::parallel::lc_round_trip_failures(days));
}
BENCHMARK(BM_LcRoundTripSerial)->Arg(100000);
BENCHMARK(BM_LcRoundTripParallel)->Arg(100000);

void BM_FactorizationSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mayan::serial::factorization_failures(1, state.range(0)));
}
void BM_FactorizationParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mayan::parallel::factorization_failures(1, state.range(0)));
}
BENCHMARK(BM_FactorizationSerial)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FactorizationParallel)->Arg(1000000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

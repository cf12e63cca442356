#include "radokit/radokit.hpp"

#include <benchmark/benchmark.h>

namespace {

using radokit::DkSystem;
using radokit::IntVector;

IntVector v(std::initializer_list<long> xs) {
  IntVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

DkSystem paper() { return DkSystem(2, {{v({2, 1}), v({2, 3})}, {v({-5, 7}), v({10, -2})}}); }

void BM_KColumnsPaper(benchmark::State& state) {
  const auto s = paper();
  for (auto _ : state) benchmark::DoNotOptimize(radokit::check_k_columns_condition(s));
}
BENCHMARK(BM_KColumnsPaper);

// x + y = 3z has no certificate, so every partition is visited.
void BM_KColumnsRefutation(benchmark::State& state) {
  const DkSystem s(1, {{v({1}), v({1}), v({-3})}, {v({2}), v({-7})}});
  for (auto _ : state) benchmark::DoNotOptimize(radokit::check_k_columns_condition(s));
}
BENCHMARK(BM_KColumnsRefutation);

void BM_ColumnsCondition(benchmark::State& state) {
  const radokit::IntMatrix m{{1, 2, -3, 4, -1, 5, -2, 1}, {0, 1, 1, -2, 3, 1, 1, -1}};
  for (auto _ : state) benchmark::DoNotOptimize(radokit::check_columns_condition(m));
}
BENCHMARK(BM_ColumnsCondition);

void BM_SmodSearch(benchmark::State& state) {
  const auto s = paper();
  const auto chi = radokit::Coloring::smod(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(radokit::find_semi_mono_solution(s, chi, 60));
}
BENCHMARK(BM_SmodSearch)->Arg(3)->Arg(7)->Arg(13);

void BM_ExtractPaper(benchmark::State& state) {
  const auto s = paper();
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  for (auto _ : state) benchmark::DoNotOptimize(radokit::extract_certificate(s, primes, 60));
}
BENCHMARK(BM_ExtractPaper)->Unit(benchmark::kMillisecond);

}  // namespace

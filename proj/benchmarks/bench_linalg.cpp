#include "radokit/radokit.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

radokit::IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-20, 20);
  radokit::IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

void BM_HermiteNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, n + 2, 17);
  for (auto _ : state) benchmark::DoNotOptimize(radokit::hermite_normal_form(m));
}
BENCHMARK(BM_HermiteNormalForm)->DenseRange(2, 8, 2);

void BM_Determinant(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, n, 23);
  for (auto _ : state) benchmark::DoNotOptimize(radokit::determinant(m));
}
BENCHMARK(BM_Determinant)->DenseRange(2, 10, 2);

void BM_IntegerSpan(benchmark::State& state) {
  const auto m = random_matrix(3, 4, 29);
  std::vector<radokit::IntVector> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) basis.push_back(m.column(c));
  radokit::IntVector target(3);
  for (std::size_t d = 0; d < 3; ++d) target[d] = 2 * basis[0][d] - 3 * basis[2][d];
  for (auto _ : state) benchmark::DoNotOptimize(radokit::in_integer_span(basis, target));
}
BENCHMARK(BM_IntegerSpan);

void BM_Smod(benchmark::State& state) {
  const radokit::Int n("1234567890123456789012345678900000");
  for (auto _ : state) benchmark::DoNotOptimize(radokit::smod(n, 5));
}
BENCHMARK(BM_Smod);

}  // namespace

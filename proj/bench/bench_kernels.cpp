#include <benchmark/benchmark.h>

#include <random>

#include "swf/qlinalg.hpp"
#include "swf/symprod.hpp"
#include "swf/swpair.hpp"

using namespace swf;

namespace {

qlinalg::QMatrix random_matrix(std::size_t rows, std::size_t cols) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> dist(-5, 5);
  qlinalg::QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = qlinalg::rat(dist(rng), 1 + (i + j) % 3);
  return m;
}

void BM_rref(benchmark::State& st) {
  const auto m = random_matrix(st.range(0), st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(qlinalg::rref(m));
}

void BM_rref_serial(benchmark::State& st) {
  const auto m = random_matrix(st.range(0), st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(qlinalg::rref_serial(m));
}

std::vector<extalg::ExtClass> basis_for(int g, int d) { return symprod::canonical_basis(g, d).elements; }

void BM_gram(benchmark::State& st) {
  const int g = static_cast<int>(st.range(0));
  const swpair::SphereParams p(g, 1);
  const auto b = basis_for(g, p.d());
  for (auto _ : st) benchmark::DoNotOptimize(swpair::gram(p, b));
}

void BM_gram_serial(benchmark::State& st) {
  const int g = static_cast<int>(st.range(0));
  const swpair::SphereParams p(g, 1);
  const auto b = basis_for(g, p.d());
  for (auto _ : st) benchmark::DoNotOptimize(swpair::gram_serial(p, b));
}

}  // namespace

BENCHMARK(BM_rref)->Arg(24)->Arg(48);
BENCHMARK(BM_rref_serial)->Arg(24)->Arg(48);
BENCHMARK(BM_gram)->Arg(3)->Arg(4);
BENCHMARK(BM_gram_serial)->Arg(3)->Arg(4);

BENCHMARK_MAIN();

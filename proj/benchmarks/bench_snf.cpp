#include <benchmark/benchmark.h>

#include <random>

#include "reeb/zlinalg.hpp"

namespace {

reeb::zl::IntMatrix random_matrix(std::size_t n, long bound) {
    std::mt19937_64 gen(0x5eed + n);
    std::uniform_int_distribution<long> entry(-bound, bound);
    reeb::zl::IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = entry(gen);
        }
    }
    return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
    const reeb::zl::IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 20);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reeb::zl::smith_normal_form(m));
    }
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(2, 12, 2);

void BM_Determinant(benchmark::State& state) {
    const reeb::zl::IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 20);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reeb::zl::determinant(m));
    }
}
BENCHMARK(BM_Determinant)->DenseRange(2, 12, 2);

}  // namespace

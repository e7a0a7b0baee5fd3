#include <benchmark/benchmark.h>

#include <vector>

#include "cullis/determinant.hpp"
#include "cullis/random.hpp"

namespace {

using cullis::DetAlgorithm;
using cullis::Field;
using cullis::RectMatrix;

std::vector<RectMatrix> inputs(Field f, int n, int k) {
    cullis::Rng rng = cullis::Rng::derive(1, "bench");
    std::vector<RectMatrix> out;
    for (int i = 0; i < 16; ++i) out.push_back(cullis::random_matrix(rng, f, n, k));
    return out;
}

// range(0) = n, range(1) = k, range(2) = 0 for GF(7) or 1 for Q.
template <DetAlgorithm Algo>
void BM_Det(benchmark::State& state) {
    const Field f = state.range(2) == 0 ? Field::prime(7) : Field::rationals();
    const auto xs = inputs(f, static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cullis::det(xs[i++ % xs.size()], Algo));
    }
    state.SetLabel(f.name());
}

void Shapes(benchmark::internal::Benchmark* b) {
    for (int field : {0, 1}) {
        for (auto [n, k] : {std::pair{4, 2}, {6, 3}, {7, 4}, {8, 5}, {9, 5}}) b->Args({n, k, field});
    }
}

BENCHMARK(BM_Det<DetAlgorithm::Definition>)->Apply(Shapes);
BENCHMARK(BM_Det<DetAlgorithm::Subsets>)->Apply(Shapes);
BENCHMARK(BM_Det<DetAlgorithm::Laplace>)->Apply(Shapes);

void BM_LambdaExpand(benchmark::State& state) {
    const Field f = Field::prime(7);
    const auto as = inputs(f, 7, 4);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cullis::lambda_expand(as[i % as.size()], as[(i + 1) % as.size()]));
        ++i;
    }
}
BENCHMARK(BM_LambdaExpand);

}  // namespace
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "johnsimplex/counterexample.hpp"
#include "johnsimplex/covering.hpp"
#include "johnsimplex/linprog.hpp"
#include "johnsimplex/mvs.hpp"
#include "johnsimplex/sampling.hpp"

using namespace johnsimplex;

namespace {

// args: n, d
void BM_MvsExactRational(benchmark::State& state) {
    const auto x = random_rational_points(static_cast<std::size_t>(state.range(0)),
                                          static_cast<std::size_t>(state.range(1)), 17);
    for (auto _ : state) benchmark::DoNotOptimize(mvs_exact(x).volume);
}
BENCHMARK(BM_MvsExactRational)->Args({20, 2})->Args({20, 3})->Args({20, 5})->Unit(benchmark::kMillisecond);

void BM_MvsExactFloat(benchmark::State& state) {
    const auto x = sample_body<double>(Body::Disk, static_cast<std::size_t>(state.range(0)),
                                       static_cast<std::size_t>(state.range(1)), 17);
    for (auto _ : state) benchmark::DoNotOptimize(mvs_exact(x).volume);
}
BENCHMARK(BM_MvsExactFloat)->Args({40, 2})->Args({20, 4})->Unit(benchmark::kMillisecond);

void BM_MvsLocalSearch(benchmark::State& state) {
    const auto x = sample_body<double>(Body::Disk, static_cast<std::size_t>(state.range(0)),
                                       static_cast<std::size_t>(state.range(1)), 17);
    for (auto _ : state) benchmark::DoNotOptimize(mvs_local_search(x, 5).volume);
}
BENCHMARK(BM_MvsLocalSearch)->Args({200, 3})->Args({1000, 5})->Unit(benchmark::kMillisecond);

template <class S>
void BM_MinDilation(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto d = static_cast<std::size_t>(state.range(1));
    const auto x = sample_body<S>(Body::Square, n, d, 29);
    const auto t = mvs_local_search(x, 1).simplex;
    for (auto _ : state) benchmark::DoNotOptimize(min_dilation(t, x, DilationSign::Positive).lambda);
}
BENCHMARK_TEMPLATE(BM_MinDilation, double)->Args({100, 3})->Args({1000, 5})->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_MinDilation, Rational)->Args({50, 2})->Args({50, 4})->Unit(benchmark::kMillisecond);

void BM_CounterexampleVerify(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(counterexample::verify_counterexample(counterexample::Config::standard()).verified);
}
BENCHMARK(BM_CounterexampleVerify)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

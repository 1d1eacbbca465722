// carlab::kernels (OpenMP) against the carlab::serial reference.
//   ./bench_kernels --benchmark_filter=weighted

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "carlab/grid.hpp"
#include "carlab/kernels.hpp"

using namespace carlab;

namespace {

std::vector<cplx> noise(std::size_t size) {
    std::vector<cplx> v(size);
    for (std::size_t i = 0; i < size; ++i) v[i] = {std::sin(0.37 * i), std::cos(1.1 * i)};
    return v;
}

GridSpec grid_of(const benchmark::State& s) { return make_grid(static_cast<int>(s.range(0)), 4.0); }

template <auto Fn>
void multiply(benchmark::State& s) {
    const GridSpec g = grid_of(s);
    const auto a = noise(g.size()), b = noise(g.size());
    std::vector<cplx> out(g.size());
    for (auto _ : s) {
        Fn(a, b, out);
        benchmark::DoNotOptimize(out.data());
    }
    s.SetItemsProcessed(s.iterations() * static_cast<long>(g.size()));
}

template <auto Fn>
void sum_abs_pow(benchmark::State& s) {
    const GridSpec g = grid_of(s);
    const auto a = noise(g.size());
    for (auto _ : s) benchmark::DoNotOptimize(Fn(a, g.n(), 4.0 / 3.0));
    s.SetItemsProcessed(s.iterations() * static_cast<long>(g.size()));
}

template <auto Fn>
void sum_weighted_abs_pow(benchmark::State& s) {
    const GridSpec g = grid_of(s);
    const auto a = noise(g.size());
    const RadialWeight w{8.0, 0.2, 2 * g.spacing(), 1.0, {0.0, 0.0}};
    for (auto _ : s) benchmark::DoNotOptimize(Fn(a, g, 4.0, w));
    s.SetItemsProcessed(s.iterations() * static_cast<long>(g.size()));
}

template <auto Fn>
void fill(benchmark::State& s) {
    const GridSpec g = grid_of(s);
    std::vector<cplx> out(g.size());
    const PointFn f = [](double x, double y) { return cplx{std::exp(-x * x - y * y), x * y}; };
    for (auto _ : s) {
        Fn(g, f, out);
        benchmark::DoNotOptimize(out.data());
    }
    s.SetItemsProcessed(s.iterations() * static_cast<long>(g.size()));
}

}  // namespace

#define CARLAB_PAIR(name)                                                              \
    BENCHMARK(name<serial::name>)->Name("serial/" #name)->RangeMultiplier(2)->Range(256, 2048);   \
    BENCHMARK(name<kernels::name>)->Name("omp/" #name)->RangeMultiplier(2)->Range(256, 2048)->UseRealTime();

CARLAB_PAIR(multiply)
CARLAB_PAIR(sum_abs_pow)
CARLAB_PAIR(sum_weighted_abs_pow)
CARLAB_PAIR(fill)

BENCHMARK_MAIN();

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "lerchlab/checks.hpp"
#include "lerchlab/functions.hpp"
#include "lerchlab/kernels.hpp"

using namespace lerchlab;

namespace {

std::vector<Point> points(int n) {
    Rng rng(1);
    return sample_points(rng, n);
}

template <auto Kernel>
void BM_evaluate(benchmark::State& state) {
    const TwistedFn F = zeta_star_fn(cplx(0.5, 3.0));
    const auto pts = points(int(state.range(0)));
    std::vector<cplx> out(pts.size());
    for (auto _ : state) {
        Kernel(F, pts, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_inner(benchmark::State& state) {
    Rng rng(2);
    const TwistedFn F = random_test_function(rng), G = random_test_function(rng);
    const QuadratureGrid grid = QuadratureGrid::tensor(int(state.range(0)), 20);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(F, G, grid.nodes));
    state.SetItemsProcessed(state.iterations() * long(grid.nodes.size()));
}

template <auto Kernel>
void BM_power_sum(benchmark::State& state) {
    Rng rng(3);
    const TwistedFn F = apply_hecke(OpKind::T, 3, random_test_function(rng));
    const QuadratureGrid grid = QuadratureGrid::tensor(int(state.range(0)), 20);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(F, 1.5, grid.nodes));
    state.SetItemsProcessed(state.iterations() * long(grid.nodes.size()));
}

}  // namespace

BENCHMARK(BM_evaluate<kernels::evaluate_serial>)->Name("evaluate/serial")->Arg(256)->Arg(2048);
BENCHMARK(BM_evaluate<kernels::evaluate_parallel>)->Name("evaluate/parallel")->Arg(256)->Arg(2048);
BENCHMARK(BM_inner<kernels::inner_serial>)->Name("inner/serial")->Arg(4)->Arg(16);
BENCHMARK(BM_inner<kernels::inner_parallel>)->Name("inner/parallel")->Arg(4)->Arg(16);
BENCHMARK(BM_power_sum<kernels::power_sum_serial>)->Name("power_sum/serial")->Arg(4)->Arg(16);
BENCHMARK(BM_power_sum<kernels::power_sum_parallel>)->Name("power_sum/parallel")->Arg(4)->Arg(16);

BENCHMARK_MAIN();

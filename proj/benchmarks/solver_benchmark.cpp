#include <benchmark/benchmark.h>

#include <vector>

#include "tfbs/collocation.hpp"
#include "tfbs/fractional_time.hpp"
#include "tfbs/time_marcher.hpp"
#include "tfbs/tridiagonal.hpp"

namespace {

using namespace tfbs;

void BM_HistoryTerm(benchmark::State& state) {
    const auto levels = static_cast<std::size_t>(state.range(0));
    const std::size_t nodes = 201;
    const auto w = FractionalWeights::make(0.5, 1.0 / levels, levels);
    Surface history(levels, nodes, 1.0);
    std::vector<double> out(nodes);
    for (auto _ : state) {
        history_term(w, history, levels - 1, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(levels * nodes));
}
BENCHMARK(BM_HistoryTerm)->RangeMultiplier(4)->Range(16, 4096);

void BM_ThomasSolve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const std::vector<double> sub(n, -1.0), diag(n, 4.0), super(n, -1.0);
    const auto factor = TriFactorization::factorize(sub, diag, super);
    std::vector<double> x(n, 1.0);
    for (auto _ : state) {
        factor.solve_in_place(x);
        benchmark::DoNotOptimize(x.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ThomasSolve)->RangeMultiplier(4)->Range(16, 16384)->Complexity(benchmark::oN);

void BM_BuildRhs(benchmark::State& state) {
    const std::size_t J = static_cast<std::size_t>(state.range(0));
    const auto spec = manufactured_problem(0.5);
    const auto basis = basis_constants(1.0, 1.0 / J);
    const auto w = FractionalWeights::make(0.5, 0.01, 100);
    const auto stencil = build_stencil(basis, w, spec.kappa);
    const std::vector<double> delta(J + 3, 0.5), source(J + 1, 0.1);
    const Surface history(1, J + 1, 0.25);
    std::vector<double> phi(J + 1);
    for (auto _ : state) {
        build_rhs(stencil, w, delta, history, source, 0, phi);
        benchmark::DoNotOptimize(phi.data());
    }
}
BENCHMARK(BM_BuildRhs)->RangeMultiplier(4)->Range(16, 4096);

void BM_FullRun(benchmark::State& state) {
    const std::size_t J = static_cast<std::size_t>(state.range(0));
    const std::size_t N = static_cast<std::size_t>(state.range(1));
    const auto spec = manufactured_problem(0.5);
    const auto grid = make_grid(spec, J, N);
    for (auto _ : state) {
        auto result = run(spec, grid, SchemeOptions{0.5, 1.0});
        benchmark::DoNotOptimize(result.final_delta.data());
    }
}
BENCHMARK(BM_FullRun)
    ->Args({50, 50})
    ->Args({200, 320})
    ->Args({64, 1024})
    ->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

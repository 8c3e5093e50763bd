#include "spingeo/geography.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace spingeo;

void bm_solve_affine(benchmark::State& state)
{
    const auto rows = static_cast<std::size_t>(state.range(0));
    std::mt19937 gen(12345);
    BitMatrix m(rows, rows);
    BitVector rhs(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < rows; ++c)
            m.set(r, c, (gen() & 1u) != 0);
        rhs.set(r, (gen() & 1u) != 0);
    }
    for (auto _ : state) {
        auto solution = solve_affine(m, rhs);
        benchmark::DoNotOptimize(solution);
    }
}
BENCHMARK(bm_solve_affine)->Arg(64)->Arg(256)->Arg(1024);

void bm_find_spin_form(benchmark::State& state)
{
    const SurfaceModel surface(6);
    const auto cycles = chain_classes(6);
    for (auto _ : state) {
        auto solutions = find_spin_form(surface, cycles);
        benchmark::DoNotOptimize(solutions);
    }
}
BENCHMARK(bm_find_spin_form);

void bm_total_action(benchmark::State& state)
{
    const LefschetzFibration lf = catalog_fibration("ChainG4");
    for (auto _ : state) {
        BitMatrix action = total_h1_action(lf.monodromy);
        benchmark::DoNotOptimize(action);
    }
}
BENCHMARK(bm_total_action);

void bm_missing_points(benchmark::State& state)
{
    for (auto _ : state) {
        CoverageReport report = missing_points(W2Plane::TypeIII);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(bm_missing_points);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "pcf9/discharging.hpp"
#include "pcf9/generator.hpp"
#include "pcf9/oracle.hpp"
#include "pcf9/reduction.hpp"

namespace {

pcf9::GeneratedGraph make(int n, std::uint64_t seed, pcf9::GenMode mode) {
    pcf9::GenSpec spec;
    spec.seed = seed;
    spec.n = n;
    spec.mode = mode;
    return pcf9::generate(spec);
}

void BM_Generate(benchmark::State& state) {
    for (auto _ : state) {
        auto g = make(static_cast<int>(state.range(0)), 7, pcf9::GenMode::TreePlusEdges);
        benchmark::DoNotOptimize(g.graph.n);
    }
}
BENCHMARK(BM_Generate)->Arg(50)->Arg(200);

void BM_FindConfiguration(benchmark::State& state) {
    auto g = make(static_cast<int>(state.range(0)), 11, pcf9::GenMode::TreePlusEdges);
    for (auto _ : state) {
        auto m = pcf9::find_configuration(g.graph);
        benchmark::DoNotOptimize(m.has_value());
    }
}
BENCHMARK(BM_FindConfiguration)->Arg(50)->Arg(200);

void BM_Solve(benchmark::State& state) {
    auto g = make(static_cast<int>(state.range(0)), 3, pcf9::GenMode::TreePlusEdges);
    for (auto _ : state) {
        auto result = pcf9::solve(g.graph);
        benchmark::DoNotOptimize(result.reductions);
    }
}
BENCHMARK(BM_Solve)->Arg(50)->Arg(100)->Arg(200);

void BM_OracleCube(benchmark::State& state) {
    auto cube = pcf9::corpus("cube");
    for (auto _ : state) {
        auto result = pcf9::exists_h_pcf_k(cube.graph, 2, 4);
        benchmark::DoNotOptimize(result.feasible());
    }
}
BENCHMARK(BM_OracleCube);

void BM_Audit(benchmark::State& state) {
    auto g = make(static_cast<int>(state.range(0)), 5, pcf9::GenMode::GridPerturb);
    for (auto _ : state) {
        auto report = pcf9::audit(g.graph, g.embedding);
        benchmark::DoNotOptimize(report.lemma_violations.size());
    }
}
BENCHMARK(BM_Audit)->Arg(100)->Arg(400);

} // namespace

BENCHMARK_MAIN();

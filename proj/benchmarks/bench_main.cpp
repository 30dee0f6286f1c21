#include <benchmark/benchmark.h>

#include "twocon/oracle.hpp"
#include "twocon/pipelines.hpp"

using namespace twocon;

static void BM_IndexSeriesSquare(benchmark::State& state) {
    Truncation t = Truncation::for_networks(static_cast<int>(state.range(0)));
    NetworkSystem sys = solve_network_system(IndexSeries(t), IndexSeries(t), t);
    for (auto _ : state) {
        IndexSeries sq = mul(sys.rho_plus, sys.rho_plus);
        benchmark::DoNotOptimize(sq);
    }
    state.counters["terms"] = static_cast<double>(sys.rho_plus.term_count());
}
BENCHMARK(BM_IndexSeriesSquare)->Arg(8)->Arg(10)->Arg(12);

static void BM_SeriesParallelPipeline(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Truncation tg = Truncation::for_graphs(n);
        pipelines::FamilyInput in{IndexSeries(tg), IndexSeries(), IndexSeries()};
        BiSeries tilde = to_tilde(pipelines::run_index_pipeline(in, tg).w_b);
        benchmark::DoNotOptimize(tilde);
    }
}
BENCHMARK(BM_SeriesParallelPipeline)->Arg(8)->Arg(11)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_PlanarPipeline(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Truncation tg = Truncation::for_graphs(n);
    pipelines::FamilyInput in = pipelines::family_input(pipelines::Family::Planar, tg, pipelines::CoreSource::oracle());
    for (auto _ : state) {
        BiSeries tilde = to_tilde(pipelines::run_index_pipeline(in, tg).w_b);
        benchmark::DoNotOptimize(tilde);
    }
}
BENCHMARK(BM_PlanarPipeline)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_EnumerateGraphs(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto classes = oracle::enumerate_graphs(n);
        benchmark::DoNotOptimize(classes);
    }
}
BENCHMARK(BM_EnumerateGraphs)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_TcDecompose(benchmark::State& state) {
    auto classes = oracle::enumerate_graphs(7, [](const SimpleGraph& g) { return oracle::is_k_connected(g, 2); });
    for (auto _ : state) {
        for (const auto& c : classes) {
            oracle::TcTree t = oracle::tc_decompose(c.graph);
            benchmark::DoNotOptimize(t);
        }
    }
    state.counters["graphs"] = static_cast<double>(classes.size());
}
BENCHMARK(BM_TcDecompose)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

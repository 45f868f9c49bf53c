#include <benchmark/benchmark.h>

#include "tautdrg/generators.hpp"
#include "tautdrg/pipeline.hpp"
#include "tautdrg/spectral.hpp"

using namespace tautdrg;

namespace {

const char* const kCorpus[] = {"hypercube:4", "doubled_odd:3", "hypercube:5", "hypercube:6", "doubled_odd:4"};

void BM_GlobalContext(benchmark::State& state)
{
    const Graph g = generate(kCorpus[state.range(0)]);
    for (auto _ : state) {
        GlobalContext ctx(g, Tolerances{});
        benchmark::DoNotOptimize(ctx.spec.theta.data());
    }
    state.SetLabel(kCorpus[state.range(0)]);
}

void BM_AnalyzeVertex(benchmark::State& state)
{
    const GlobalContext ctx(generate(kCorpus[state.range(0)]), Tolerances{});
    for (auto _ : state) {
        const VertexAnalysis an = analyze_vertex(ctx, 0);
        benchmark::DoNotOptimize(an.accounting.residual);
    }
    state.SetLabel(kCorpus[state.range(0)]);
}

void BM_Pipeline(benchmark::State& state)
{
    const Graph g = generate(kCorpus[state.range(0)]);
    AnalysisOptions opts;
    opts.all_vertices = state.range(1) != 0;
    for (auto _ : state) {
        const Analysis a = run_analysis(g, opts);
        benchmark::DoNotOptimize(a.taut.delta);
    }
    state.SetLabel(std::string(kCorpus[state.range(0)]) + (opts.all_vertices ? " all" : " x=0"));
}

void BM_SymEigen(benchmark::State& state)
{
    const Graph g = hypercube(static_cast<int>(state.range(0)));
    Matrix A = Matrix::Zero(g.order(), g.order());
    for (const auto& [u, v] : g.edges())
        A(u, v) = A(v, u) = 1;
    for (auto _ : state) {
        const auto dec = sym_eigen(A);
        benchmark::DoNotOptimize(dec.values.data());
    }
    state.SetLabel("n=" + std::to_string(g.order()));
}

}  // namespace

BENCHMARK(BM_GlobalContext)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnalyzeVertex)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Pipeline)->ArgsProduct({{0, 1, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymEigen)->Arg(4)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "tdkernel/kernel.hpp"
#include "tdkernel/reductions.hpp"
#include "tdkernel/solver.hpp"
#include "tdkernel/treedepth.hpp"

using namespace tdk;

namespace {

Graph random_graph(unsigned seed, int n, double p) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

void BM_alpha_branch_and_bound(benchmark::State& state) {
    Graph g = random_graph(1, int(state.range(0)), 0.15);
    for (auto _ : state)
        benchmark::DoNotOptimize(alpha_exact(g, {}, AlphaEngine::branch_and_bound).value);
}
BENCHMARK(BM_alpha_branch_and_bound)->Arg(40)->Arg(80)->Arg(120);

void BM_alpha_treedepth_dp(benchmark::State& state) {
    // sparse instance keeps the decomposition shallow, where the DP shines
    Graph g = random_graph(2, int(state.range(0)), 2.5 / double(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(alpha_exact(g, {}, AlphaEngine::treedepth_dp).value);
}
BENCHMARK(BM_alpha_treedepth_dp)->Arg(24)->Arg(32);

void BM_td_exact(benchmark::State& state) {
    Graph g = random_graph(3, int(state.range(0)), 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(td_exact(g).value);
}
BENCHMARK(BM_td_exact)->Arg(14)->Arg(18);

void BM_gamma_exact(benchmark::State& state) {
    Graph g = random_graph(4, int(state.range(0)), 0.2);
    for (auto _ : state)
        benchmark::DoNotOptimize(gamma_exact(g, g.vertex_count()).has_value());
}
BENCHMARK(BM_gamma_exact)->Arg(24)->Arg(32);

void BM_full_pipeline(benchmark::State& state) {
    Graph g = random_graph(5, int(state.range(0)), 0.25);
    for (auto _ : state) {
        PipelineResult r = full_pipeline(g, g.vertex_count() / 3, 2);
        benchmark::DoNotOptimize(r.kernel_k);
    }
}
BENCHMARK(BM_full_pipeline)->Arg(12)->Arg(16);

void BM_conf_total(benchmark::State& state) {
    // star-heavy remainder: X = {0,1}, R = pending leaves on both
    int leaves = int(state.range(0));
    Graph g(2 + leaves);
    for (int i = 0; i < leaves; ++i) {
        g.add_edge(0, 2 + i);
        if (i % 2 == 0) g.add_edge(1, 2 + i);
    }
    AnnotatedInstance inst =
        AnnotatedInstance::make(std::move(g), VertexSet(std::vector<int>{0, 1}), {}, 1, 1);
    for (auto _ : state) {
        ConfCache cache;
        benchmark::DoNotOptimize(cache.conf_total(inst, inst.x(), 1 << 20));
    }
}
BENCHMARK(BM_conf_total)->Arg(16)->Arg(64);

void BM_cross_compose(benchmark::State& state) {
    std::mt19937 rng(6);
    std::uniform_int_distribution<int> var(1, 8);
    std::vector<CnfFormula> batch;
    for (int i = 0; i < int(state.range(0)); ++i) {
        std::vector<std::array<int, 3>> clauses;
        for (int j = 0; j < 10; ++j)
            clauses.push_back({var(rng), -var(rng), var(rng)});
        batch.emplace_back(8, std::move(clauses));
    }
    for (auto _ : state) {
        LabeledInstance li = cross_compose_3sat(batch);
        benchmark::DoNotOptimize(li.g.edge_count());
    }
}
BENCHMARK(BM_cross_compose)->Arg(4)->Arg(16);

} // namespace

BENCHMARK_MAIN();

// Serial reference vs OpenMP traversal of the reconfiguration graph, plus the cover census.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "recolor/cover.hpp"
#include "recolor/oracle.hpp"

using namespace recolor;

namespace {

Instance wheel(int rim) {
    std::vector<Edge> e;
    for (int v = 1; v <= rim; ++v) {
        e.emplace_back(0, v);
        e.emplace_back(v, v % rim + 1);
    }
    Graph g = Graph::build(rim + 1, e);
    ListAssignment L = ListAssignment::uniform(rim + 1, 4);
    return {std::move(g), std::move(L)};
}

Instance instance_for(int which) {
    switch (which) {
        case 0: return {Graph::cycle(14), ListAssignment::uniform(14, 3)};
        case 1: return wheel(9);
        default: return {Graph::path(10), ListAssignment::uniform(10, 4)};
    }
}

void explore_with(benchmark::State& state, Exec exec) {
    const Instance inst = instance_for(static_cast<int>(state.range(0)));
    ExploreOptions opt;
    opt.exec = exec;
    opt.exact_diameter_limit = 0;
    opt.sampled_roots = 16;
    std::uint64_t total = 0;
    for (auto _ : state) {
        const auto s = explore(inst.graph, inst.lists, opt);
        total = s.total_colourings;
        benchmark::DoNotOptimize(s.components.data());
    }
    state.counters["colourings"] = static_cast<double>(total);
    state.counters["threads"] = exec == Exec::serial ? 1 : omp_get_max_threads();
}

void BM_explore_serial(benchmark::State& state) { explore_with(state, Exec::serial); }
void BM_explore_parallel(benchmark::State& state) { explore_with(state, Exec::parallel); }

void BM_census_k4(benchmark::State& state) {
    const int threads = static_cast<int>(state.range(0));
    const int saved = omp_get_max_threads();
    omp_set_num_threads(threads == 0 ? saved : threads);
    for (auto _ : state) benchmark::DoNotOptimize(census_covers(4).bad_classes);
    omp_set_num_threads(saved);
    state.counters["threads"] = threads == 0 ? saved : threads;
}

}  // namespace

BENCHMARK(BM_explore_serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_explore_parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
// Argument 1 is single-threaded; 0 uses every available thread.
BENCHMARK(BM_census_k4)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->Iterations(2);

BENCHMARK_MAIN();

// Serial reference vs OpenMP kernel throughput for the three data-parallel
// surfaces: universe enumeration, pairwise hom matrices, self-relation scans.

#include <benchmark/benchmark.h>

#include "grel/embed.hpp"
#include "grel/parallel.hpp"

using namespace grel;

static void BM_enumerate_serial(benchmark::State& state) {
    UniverseSpec spec{false, true, (int)state.range(0)};
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_canonical_serial(spec));
}
BENCHMARK(BM_enumerate_serial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_enumerate_parallel(benchmark::State& state) {
    UniverseSpec spec{false, true, (int)state.range(0)};
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_canonical_parallel(spec));
}
BENCHMARK(BM_enumerate_parallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static std::vector<Graph> dicycle_images() {
    Poset p = Poset::from_pairs({3, 5, 7, 11}, {{7, 3}, {7, 5}, {11, 5}, {3, 5}, {7, 11}});
    return embed_into_dicycles(p);
}

static void BM_hom_matrix_serial(benchmark::State& state) {
    auto images = dicycle_images();
    for (auto _ : state)
        benchmark::DoNotOptimize(hom_matrix_serial(images, HomConstraint::Plain));
}
BENCHMARK(BM_hom_matrix_serial)->Unit(benchmark::kMillisecond);

static void BM_hom_matrix_parallel(benchmark::State& state) {
    auto images = dicycle_images();
    for (auto _ : state)
        benchmark::DoNotOptimize(hom_matrix_parallel(images, HomConstraint::Plain));
}
BENCHMARK(BM_hom_matrix_parallel)->Unit(benchmark::kMillisecond);

static void BM_self_relation_scan_serial(benchmark::State& state) {
    Graph c5 = generate(Family::Cycle, 5);
    for (auto _ : state) benchmark::DoNotOptimize(scan_self_relations_serial(c5));
}
BENCHMARK(BM_self_relation_scan_serial)->Unit(benchmark::kMillisecond);

static void BM_self_relation_scan_parallel(benchmark::State& state) {
    Graph c5 = generate(Family::Cycle, 5);
    for (auto _ : state) benchmark::DoNotOptimize(scan_self_relations_parallel(c5));
}
BENCHMARK(BM_self_relation_scan_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

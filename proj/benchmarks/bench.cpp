#include <benchmark/benchmark.h>

#include "hyperchip/counting.hpp"
#include "hyperchip/digraph.hpp"
#include "hyperchip/parking.hpp"
#include "hyperchip/trees.hpp"

using namespace hyperchip;

namespace {

RootedHypergraph running_example() {
    return parse_hypergraph(
        R"({"vertices":["1","2","3","4"],"edges":[["1","2","3"],["1","2","4"],["1","3","4"]],"sink":"4"})");
}

void bm_is_parking_burn(benchmark::State& state) {
    auto h = running_example();
    Configuration c{2, 1, 0};
    for (auto _ : state) benchmark::DoNotOptimize(is_parking_burn(h, c));
}
BENCHMARK(bm_is_parking_burn);

void bm_enumerate_parking(benchmark::State& state) {
    auto h = complete_hypergraph(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_parking(h));
}
BENCHMARK(bm_enumerate_parking)->Arg(4)->Arg(5);

void bm_tree_classes(benchmark::State& state) {
    auto h = running_example();
    for (auto _ : state) benchmark::DoNotOptimize(tree_classes(h));
}
BENCHMARK(bm_tree_classes);

void bm_union_over_cyclings(benchmark::State& state) {
    auto h = running_example();
    for (auto _ : state) benchmark::DoNotOptimize(union_over_cyclings(h));
}
BENCHMARK(bm_union_over_cyclings);

void bm_steck_count(benchmark::State& state) {
    std::vector<int> u(static_cast<std::size_t>(state.range(0)));
    for (std::size_t k = 0; k < u.size(); ++k) u[k] = static_cast<int>(k + 1);
    for (auto _ : state) benchmark::DoNotOptimize(steck_count(u));
}
BENCHMARK(bm_steck_count)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();

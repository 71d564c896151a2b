#include <benchmark/benchmark.h>

#include "schubkit/bounds.hpp"
#include "schubkit/diagram.hpp"
#include "schubkit/perm.hpp"
#include "schubkit/poly.hpp"
#include "schubkit/support.hpp"

namespace {

using namespace schubkit;

// The two support routes on the same mid-size permutation; the gap between
// these is the reason the diagram path exists.
void BM_support_via_diagrams(benchmark::State& state) {
    const Permutation w = layered(LayeredSpec{{1, 2, 4}});
    for (auto _ : state) benchmark::DoNotOptimize(schubert_support_via_diagrams(w));
}
BENCHMARK(BM_support_via_diagrams);

void BM_support_via_polynomial(benchmark::State& state) {
    const Permutation w = layered(LayeredSpec{{1, 2, 4}});
    for (auto _ : state) benchmark::DoNotOptimize(support(schubert(w)));
}
BENCHMARK(BM_support_via_polynomial);

void BM_grothendieck_box_union(benchmark::State& state) {
    const Permutation w = layered(LayeredSpec{{1, 2, 3}});
    for (auto _ : state) benchmark::DoNotOptimize(grothendieck_support_fireworks(w));
}
BENCHMARK(BM_grothendieck_box_union);

void BM_schubert_sweep_s5(benchmark::State& state) {
    for (auto _ : state) {
        SweepOptions opts;
        benchmark::DoNotOptimize(beta_sweep(5, PolyKind::Schubert, opts));
    }
}
BENCHMARK(BM_schubert_sweep_s5);

void BM_schubitope_points(benchmark::State& state) {
    const Diagram d = rothe(parse_permutation("31542"));
    for (auto _ : state) benchmark::DoNotOptimize(schubitope_lattice_points(d));
}
BENCHMARK(BM_schubitope_points);

}  // namespace

BENCHMARK_MAIN();

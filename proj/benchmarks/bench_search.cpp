#include <benchmark/benchmark.h>

#include "isofrag/cayley.hpp"
#include "isofrag/theorems.hpp"

using namespace isofrag;

namespace {

Relation circulant(int n, std::initializer_list<int> s) {
    auto g = FiniteGroup::build(GroupDescriptor::cyclic(n));
    return cayley_relation(g, ElementSet::of(n, s));
}

void BM_SetProduct(benchmark::State& state) {
    FiniteGroup g = FiniteGroup::build(GroupDescriptor::dihedral(static_cast<int>(state.range(0))));
    ElementSet a(g.order()), b(g.order());
    for (int i = 0; i < g.order(); i += 2) a.add(i);
    for (int i = 0; i < g.order(); i += 3) b.add(i);
    for (auto _ : state) benchmark::DoNotOptimize(set_product(g, a, b));
}
BENCHMARK(BM_SetProduct)->Arg(8)->Arg(16)->Arg(32);

void BM_Kappa(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Relation r = circulant(n, {0, 1, 3});
    SearchOptions opts;
    for (auto _ : state) benchmark::DoNotOptimize(kappa(r, 2, opts));
}
BENCHMARK(BM_Kappa)->Arg(12)->Arg(16)->Arg(20)->Arg(24);

void BM_KappaParallel(benchmark::State& state) {
    Relation r = circulant(22, {0, 1, 3, 7});
    SearchOptions opts;
    opts.threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kappa(r, 2, opts));
}
BENCHMARK(BM_KappaParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void BM_FragmentEnumeration(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Relation r = circulant(n, {0, 1, 3});
    SearchOptions opts;
    opts.collect_fragments = false;
    for (auto _ : state) benchmark::DoNotOptimize(fragment_report(r, 2, opts));
}
BENCHMARK(BM_FragmentEnumeration)->Arg(12)->Arg(16)->Arg(20);

void BM_Classify(benchmark::State& state) {
    Relation r = circulant(static_cast<int>(state.range(0)), {0, 1, 4});
    for (auto _ : state) benchmark::DoNotOptimize(classify(r));
}
BENCHMARK(BM_Classify)->Arg(12)->Arg(16);

void BM_MainTheoremInstance(benchmark::State& state) {
    FiniteGroup g = FiniteGroup::build(GroupDescriptor::cyclic(16));
    ElementSet a = ElementSet::of(16, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    for (auto _ : state) benchmark::DoNotOptimize(verify_main_theorem(g, a));
}
BENCHMARK(BM_MainTheoremInstance);

void BM_StructureScan(benchmark::State& state) {
    ScanConfig config;
    config.groups = {GroupDescriptor::cyclic(10)};
    config.max_order = 10;
    config.threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(scan(config, "2atomcay"));
}
BENCHMARK(BM_StructureScan)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();

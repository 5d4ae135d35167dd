#include <benchmark/benchmark.h>

#include "secsheaf/theorems.hpp"

using namespace secsheaf;

static void BM_SecondSpectrum(benchmark::State& state) {
    auto m = FiniteModule::natural(FiniteRing::zmod((int)state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(SecondSpectrum::compute(m));
}
BENCHMARK(BM_SecondSpectrum)->Arg(6)->Arg(12)->Arg(24)->Arg(36);

static void BM_DualTopology(benchmark::State& state) {
    auto m = FiniteModule::natural(FiniteRing::zmod((int)state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(DualTopology::compute(SecondSpectrum::compute(m)));
}
BENCHMARK(BM_DualTopology)->Arg(6)->Arg(12)->Arg(30);

static void BM_GlobalSections(benchmark::State& state) {
    auto ring = FiniteRing::zmod((int)state.range(0));
    auto m = FiniteModule::natural(ring);
    DualTopology topo = DualTopology::compute(SecondSpectrum::compute(m));
    for (auto _ : state) {
        Sheaf sheaf(dual_section_space(topo, m));
        benchmark::DoNotOptimize(sheaf.global_sections().module->order());
    }
}
BENCHMARK(BM_GlobalSections)->Arg(6)->Arg(12)->Arg(30);

static void BM_TheoremSuite(benchmark::State& state) {
    auto ring = FiniteRing::zmod(6);
    auto m = FiniteModule::natural(ring);
    DualTopology topo = DualTopology::compute(SecondSpectrum::compute(m));
    Submodule k = Submodule::span(m, {3});
    for (auto _ : state) benchmark::DoNotOptimize(theorem_suite(topo, m, k).records.size());
}
BENCHMARK(BM_TheoremSuite);

BENCHMARK_MAIN();

#include "relalg/catalog.hpp"
#include "relalg/detectors.hpp"
#include "relalg/oracle.hpp"
#include "relalg/probe.hpp"

#include <benchmark/benchmark.h>

using namespace relalg;

static void probe_ternary_17(benchmark::State &state)
{
    const auto ra = catalog_algebra("17");
    for (auto _ : state)
        benchmark::DoNotOptimize(probe_theorem6(ra, *ra.find_atom("a")));
}
BENCHMARK(probe_ternary_17);

static void probe_two_classes_13(benchmark::State &state)
{
    const auto ra = catalog_algebra("13");
    const auto e = nontrivial_equivalence_elements(ra).front();
    for (auto _ : state)
        benchmark::DoNotOptimize(probe_theorem5_case1(ra, e));
}
BENCHMARK(probe_two_classes_13);

static void probe_many_classes(benchmark::State &state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(probe_theorem5_case2(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
}
BENCHMARK(probe_many_classes)->Args({3, 5})->Args({5, 7})->Args({10, 11});

static void classify_catalog(benchmark::State &state)
{
    const auto ra = catalog_algebra(state.range(0) ? "17" : "13");
    for (auto _ : state)
        benchmark::DoNotOptimize(classify(ra));
}
BENCHMARK(classify_catalog)->Arg(0)->Arg(1);

static void enumerate_henson_models(benchmark::State &state)
{
    const auto ra = catalog_algebra("17");
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_models(ra, n, 6));
}
BENCHMARK(enumerate_henson_models)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

#include "lspace/calculus.hpp"
#include "lspace/classify.hpp"
#include "lspace/rationality.hpp"
#include "lspace/surgery.hpp"

#include <benchmark/benchmark.h>

using namespace lspace;

namespace {

PlumbingGraph big_star(int legs, int len) {
    std::vector<std::vector<long long>> arms(legs, std::vector<long long>(len, -2));
    for (auto& arm : arms)
        arm.back() = -3;
    return make_star(-legs - 1, arms);
}

void BM_ClassifyTorus(benchmark::State& state) {
    for (auto _ : state) {
        for (long long d1 = -4; d1 <= 10; ++d1)
            for (long long d2 = -4; d2 <= 10; ++d2)
                benchmark::DoNotOptimize(classify_torus({2, 3, {d1, d2}}));
    }
}
BENCHMARK(BM_ClassifyTorus);

void BM_SurgeryOracle(benchmark::State& state) {
    ResolutionData res = torus_resolution(3, 5, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(is_lspace_oracle(surgery_graph(res, {11, 18})));
}
BENCHMARK(BM_SurgeryOracle);

void BM_FundamentalCycle(benchmark::State& state) {
    PlumbingGraph g = big_star(static_cast<int>(state.range(0)), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(fundamental_cycle(g));
}
BENCHMARK(BM_FundamentalCycle)->Arg(4)->Arg(8)->Arg(16);

void BM_Determinant(benchmark::State& state) {
    DecoratedGraph dg = random_smooth_decorated(7, static_cast<int>(state.range(0)), 0);
    IntersectionMatrix m = intersection_matrix(dg.graph);
    for (auto _ : state)
        benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_Determinant)->Arg(16)->Arg(64)->Arg(128);

void BM_Normalize(benchmark::State& state) {
    ResolutionData res = torus_resolution(4, 7, 3);
    PlumbingGraph g = surgery_graph(res, {30, 31, 40});
    for (auto _ : state)
        benchmark::DoNotOptimize(normalize(g));
}
BENCHMARK(BM_Normalize);

void BM_Atlas(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(atlas(2, 3, -6, 12));
}
BENCHMARK(BM_Atlas);

} // namespace

BENCHMARK_MAIN();

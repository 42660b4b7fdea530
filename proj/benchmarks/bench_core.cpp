#include "intervar/classifier.hpp"
#include "intervar/matching.hpp"
#include "intervar/oracle.hpp"
#include "intervar/sampling.hpp"
#include "intervar/variety.hpp"

#include <benchmark/benchmark.h>

using namespace intervar;

namespace {

void BM_hom_window(benchmark::State& state) {
    SampleRng rng(1);
    std::vector<IntervalModule> pool;
    for (int i = 0; i < 256; ++i) pool.push_back(rng.interval());
    std::size_t i = 0;
    for (auto _ : state) {
        const HomWindow w = hom_window(pool[i % pool.size()], pool[(i + 7) % pool.size()]);
        benchmark::DoNotOptimize(w);
        ++i;
    }
}
BENCHMARK(BM_hom_window);

void BM_progression(benchmark::State& state) {
    SampleRng rng(2);
    std::vector<std::pair<IntervalModule, IntervalModule>> pool;
    for (int i = 0; i < 128; ++i) pool.emplace_back(rng.interval(), rng.interval());
    std::size_t i = 0;
    for (auto _ : state) {
        const Progression prog = progression(pool[i % pool.size()].first,
                                             pool[i % pool.size()].second);
        benchmark::DoNotOptimize(prog);
        ++i;
    }
}
BENCHMARK(BM_progression);

void BM_build_variety(benchmark::State& state) {
    const int summands = static_cast<int>(state.range(0));
    SampleRng rng(3);
    const PersistenceModule m = rng.module("M", summands, summands);
    const PersistenceModule n = rng.module("N", summands, summands);
    for (auto _ : state) {
        const VarietyPresentation p = build_variety(m, n, Rational(1, 2));
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_build_variety)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_classify_solutions_1x1(benchmark::State& state) {
    SampleRng rng(4);
    std::vector<std::pair<IntervalModule, IntervalModule>> pool;
    for (int i = 0; i < 128; ++i) pool.emplace_back(rng.interval(), rng.interval());
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [m, n] = pool[i % pool.size()];
        benchmark::DoNotOptimize(classify_solutions_1x1(m, n, Rational(1, 2)));
        ++i;
    }
}
BENCHMARK(BM_classify_solutions_1x1);

void BM_match_distance(benchmark::State& state) {
    const int summands = static_cast<int>(state.range(0));
    SampleRng rng(5);
    const PersistenceModule m = rng.module("M", summands, summands);
    const PersistenceModule n = rng.module("N", summands, summands);
    for (auto _ : state) {
        benchmark::DoNotOptimize(match_distance(m, n));
    }
}
BENCHMARK(BM_match_distance)->Arg(2)->Arg(8)->Arg(24);

}  // namespace

BENCHMARK_MAIN();

#include "ainf/extension.hpp"
#include "ainf/pdcorrect.hpp"
#include "ainf/transfer.hpp"
#include "ainf/tty.hpp"
#include "models.hpp"
#include "pd_instances.hpp"

#include <benchmark/benchmark.h>

using namespace ainf;

static void BM_TransferKodairaThurston(benchmark::State& state) {
    Dga kt = testing::kodaira_thurston();
    for (auto _ : state) benchmark::DoNotOptimize(strictly_unital_transfer(kt, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TransferKodairaThurston)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_TransferRandom(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::vector<Dga> suite;
    for (int i = 0; i < 10; ++i) suite.push_back(testing::transport(testing::random_dga(rng, 10), rng));
    for (auto _ : state)
        for (const auto& a : suite) benchmark::DoNotOptimize(strictly_unital_transfer(a, 4));
}
BENCHMARK(BM_TransferRandom)->Unit(benchmark::kMillisecond);

static void BM_TorusWitness(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(torus_nonformality_witness(static_cast<int>(state.range(0)), 6));
}
BENCHMARK(BM_TorusWitness)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_TTYStructure(benchmark::State& state) {
    Dga t4 = testing::torus(4);
    auto ctx = std::make_shared<const LefschetzContext>(SymplecticModel(t4, t4.element("e1*e2") + t4.element("e3*e4")));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_tty_structure(build_filtered_complex(ctx, static_cast<int>(state.range(0))), 5));
}
BENCHMARK(BM_TTYStructure)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_PdCorrect(benchmark::State& state) {
    auto in = make_cyclic_pd_input(self_transfer(testing::pd_with_m3_m4(6), 6), 2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(pd_correct(in, 6));
}
BENCHMARK(BM_PdCorrect)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

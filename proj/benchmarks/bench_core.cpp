#include <benchmark/benchmark.h>

#include "ternary/campaign.hpp"
#include "ternary/counterexample.hpp"
#include "ternary/elimination.hpp"
#include "ternary/random.hpp"

using namespace ternary;

namespace {

const std::vector<std::vector<std::size_t>> kNests{{1, 2}, {1, 2, 3}, {2, 4}, {1, 2, 3, 6}};

void BM_Rref(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    SplitMix64 rng(1);
    const Mat m = random_mat(rng, n, n, Field::rational);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_EliminationReplay(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    SplitMix64 rng(2);
    const Mat m = random_mat(rng, n, n, Field::rational);
    const Elimination elim(m);
    const Vec b = random_vec(rng, n, Field::rational);
    for (auto _ : state) benchmark::DoNotOptimize(elim.particular(b));
}
BENCHMARK(BM_EliminationReplay)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_SolveRst(benchmark::State& state) {
    const NestAlgebra nest{NestSpec(kNests[static_cast<std::size_t>(state.range(0))])};
    const auto& alg = nest.algebra();
    SplitMix64 rng(3);
    const std::size_t d = alg.dim();
    const ImplementingTriple rst{random_vec(rng, d, Field::rational), random_vec(rng, d, Field::rational),
                                 random_vec(rng, d, Field::rational)};
    const OpMap delta = delta_map(alg, rst), tau = tau_map(alg, rst);
    for (auto _ : state) benchmark::DoNotOptimize(solve_rst(alg, delta, tau, false));
    state.SetLabel(nest.spec().str());
}
BENCHMARK(BM_SolveRst)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_DecideZRefute(benchmark::State& state) {
    const NestAlgebra nest{NestSpec(kNests[static_cast<std::size_t>(state.range(0))])};
    const auto& alg = nest.algebra();
    const auto idem = nest.idempotent_generators();
    SplitMix64 rng(4);
    const std::size_t d = alg.dim();
    const OpMap delta(random_mat(rng, d, d, Field::rational)), tau(random_mat(rng, d, d, Field::rational));
    for (auto _ : state) benchmark::DoNotOptimize(decide_z(alg, idem, delta, tau, 256, 5));
    state.SetLabel(nest.spec().str());
}
BENCHMARK(BM_DecideZRefute)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_TheoremTrial(benchmark::State& state) {
    const NestAlgebra nest{NestSpec(kNests[static_cast<std::size_t>(state.range(0))])};
    const TrialContext ctx(nest, Field::rational, 256, 8);
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(theorem_trial(ctx, seed++, 0, true));
    state.SetLabel(nest.spec().str());
}
BENCHMARK(BM_TheoremTrial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Counterexample(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(counterexample_bundle());
}
BENCHMARK(BM_Counterexample)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

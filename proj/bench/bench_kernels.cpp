#include <benchmark/benchmark.h>

#include "canonica/hecke.hpp"
#include "canonica/irreps.hpp"
#include "canonica/powers.hpp"
#include "canonica/tensor.hpp"

using namespace canonica;

namespace {

const Weight kMu{3, 2, 2, 1};
const Weight kNu{2, 2, 2, 1, 1};

// Full dual canonical basis of one tensor weight space.
void BM_TensorLift(benchmark::State& state) {
    const Execution exec = state.range(0) ? Execution::Parallel : Execution::Serial;
    auto ws = WeightSpace::get(Weight{2, 2, 1, 1});
    std::vector<std::size_t> all(ws->size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    for (auto _ : state) benchmark::DoNotOptimize(ws->dual_lift().columns(all, exec));
}
BENCHMARK(BM_TensorLift)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TransitionLift(benchmark::State& state) {
    const Execution exec = state.range(0) ? Execution::Parallel : Execution::Serial;
    for (auto _ : state) benchmark::DoNotOptimize(transition(PowerKind::ExtTilde, kMu, kNu, exec));
}
BENCHMARK(BM_TransitionLift)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// Memoized after the first pass; the first iteration dominates.
void BM_TransitionKl(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(transition_kl(PowerKind::ExtTilde, kMu, kNu, Execution::Parallel));
}
BENCHMARK(BM_TransitionKl)->Iterations(1)->Unit(benchmark::kMillisecond);

void BM_KlS5(benchmark::State& state) {
    const auto perms = all_permutations(5);
    for (auto _ : state)
        for (const auto& y : perms) benchmark::DoNotOptimize(kl_polynomial(perms.front(), y));
}
BENCHMARK(BM_KlS5)->Unit(benchmark::kMillisecond);

void BM_Main1Block(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(main1_check(Weight{2, 2, 1}, Weight{2, 1, 1, 1}));
}
BENCHMARK(BM_Main1Block)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

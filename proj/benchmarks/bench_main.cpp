#include <benchmark/benchmark.h>

#include <cstdint>

#include "dicke/eigensolve.hpp"
#include "dicke/hamiltonians.hpp"
#include "dicke/matrix.hpp"
#include "dicke/observables.hpp"
#include "dicke/params.hpp"

namespace {

using namespace dicke;

// Deterministic dense symmetric test matrix (LCG fill), entries in [-0.5, 0.5)
// plus a diagonal shift to spread the spectrum.
OperatorMatrix random_symmetric(int dim) {
    OperatorMatrix h(dim, "bench(" + std::to_string(dim) + ")", true);
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&state]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<double>(state >> 11) / 9007199254740992.0 - 0.5;
    };
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
            const double v = next();
            h(i, j) = v;
            h(j, i) = v;
        }
        h(i, i) += i;
    }
    return h;
}

void BM_GroundStateSolve(benchmark::State& state) {
    const OperatorMatrix h = random_symmetric(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigh(h, 1));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GroundStateSolve)->RangeMultiplier(2)->Range(32, 256)->Complexity();

void BM_DickeSectorSpectrum(benchmark::State& state) {
    ModelParams p;
    p.lambda = 0.55;
    p.n_atoms = static_cast<int>(state.range(0));
    p.cutoff = 40;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dicke_spectrum(p));
    }
}
BENCHMARK(BM_DickeSectorSpectrum)->Arg(8)->Arg(16)->Arg(32);

void BM_EffectiveAutoCutoff(benchmark::State& state) {
    ModelParams p;
    p.lambda = 0.45;
    p.cutoff = 8;
    for (auto _ : state) {
        benchmark::DoNotOptimize(converged_ground_observables(p, 1e-8));
    }
}
BENCHMARK(BM_EffectiveAutoCutoff);

void BM_EffectiveFixedCutoff(benchmark::State& state) {
    ModelParams p;
    p.lambda = 0.45;
    p.cutoff = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ground_observables(p));
    }
}
BENCHMARK(BM_EffectiveFixedCutoff)->RangeMultiplier(4)->Range(16, 256);

}  // namespace

BENCHMARK_MAIN();

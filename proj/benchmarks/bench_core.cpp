#include <benchmark/benchmark.h>

#include "faraday/analysis.hpp"
#include "faraday/cavity.hpp"
#include "faraday/protocols.hpp"
#include "faraday/state.hpp"

using namespace faraday;
using L = Subsystem;

namespace {

PureState five_qubit_state() {
    PureState s = tensor(bell_pair(L::AtomA, L::AtomB, BellKind::PsiPlus),
                         bell_pair(L::AtomC, L::AtomD, BellKind::PsiPlus));
    return tensor(s, PureState({L::Photon}, {0.6, 0.8}));
}

void BM_apply_1q(benchmark::State& state) {
    const PureState s = five_qubit_state();
    const Gate1Q h = gates::hadamard();
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_1q(s, L::AtomC, h));
    }
}
BENCHMARK(BM_apply_1q);

void BM_apply_diag2(benchmark::State& state) {
    const PureState s = five_qubit_state();
    const auto d = scattering_map(ideal_phases());
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_diag2(s, L::AtomB, L::Photon, d));
    }
}
BENCHMARK(BM_apply_diag2);

void BM_measure_enumerate(benchmark::State& state) {
    const PureState s = five_qubit_state();
    for (auto _ : state) {
        benchmark::DoNotOptimize(measure_enumerate(s, {L::Photon, L::AtomB, L::AtomD}));
    }
}
BENCHMARK(BM_measure_enumerate);

void BM_run_case1(benchmark::State& state) {
    const PhasePair pp = ideal_phases();
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_case1(pp));
    }
}
BENCHMARK(BM_run_case1);

void BM_run_case2(benchmark::State& state) {
    const PhasePair pp = ideal_phases();
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_case2(pp));
    }
}
BENCHMARK(BM_run_case2);

void BM_phase_shifts(benchmark::State& state) {
    const CavityParams p = CavityParams::canonical();
    for (auto _ : state) {
        benchmark::DoNotOptimize(phase_shifts(p));
    }
}
BENCHMARK(BM_phase_shifts);

void BM_sweep_omega_p(benchmark::State& state) {
    SweepSpec spec;
    spec.axes.push_back({SweepParam::OmegaP, -1.0, 0.0,
                         static_cast<int>(state.range(0))});
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep(spec));
    }
}
BENCHMARK(BM_sweep_omega_p)->Arg(11)->Arg(101);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "fnkgs/cn_scheme.hpp"
#include "fnkgs/esav_scheme.hpp"
#include "fnkgs/problems.hpp"
#include "fnkgs/runner.hpp"

namespace {

using namespace fnkgs;

const ProblemSpec& bench_problem() {
    static ProblemSpec p = example1(1.5);
    return p;
}

const OperatorSet& bench_ops() {
    static OperatorSet ops(150, bench_problem().map, bench_problem().alpha);
    return ops;
}

void BM_CnStep(benchmark::State& state) {
    const ProblemSpec& prob = bench_problem();
    const OperatorSet& ops = bench_ops();
    CnStepper stepper(prob, ops, 0.01);
    stepper.set_state(make_initial_state(prob, ops, InitMode::b_proj));
    for (auto _ : state) {
        StepReport rep = stepper.step();
        benchmark::DoNotOptimize(rep.stats.residual);
        if (rep.status != StepStatus::ok) state.SkipWithError("step failed");
    }
}
BENCHMARK(BM_CnStep)->Unit(benchmark::kMillisecond);

void BM_EsavStep(benchmark::State& state) {
    const ProblemSpec& prob = bench_problem();
    const OperatorSet& ops = bench_ops();
    EsavStepper stepper(prob, ops, 0.01);
    stepper.set_state(make_initial_state(prob, ops, InitMode::b_proj));
    for (auto _ : state) {
        StepReport rep = stepper.step();
        benchmark::DoNotOptimize(rep.stats.residual);
        if (rep.status != StepStatus::ok) state.SkipWithError("step failed");
    }
}
BENCHMARK(BM_EsavStep)->Unit(benchmark::kMillisecond);

void BM_StiffnessAssembly(benchmark::State& state) {
    DomainMap map{-20.0, 20.0};
    for (auto _ : state) {
        Mat S = build_stiffness(static_cast<int>(state.range(0)), map, 1.5);
        benchmark::DoNotOptimize(S.data());
    }
}
BENCHMARK(BM_StiffnessAssembly)->Arg(50)->Arg(100)->Arg(150)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

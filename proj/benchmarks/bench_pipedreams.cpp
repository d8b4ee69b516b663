#include <benchmark/benchmark.h>

#include <numeric>

#include "grothlab/checks.hpp"
#include "grothlab/polynomial.hpp"
#include "grothlab/weight_raiser.hpp"

using namespace grothlab;

namespace {

void BM_Trace(benchmark::State& state) {
    const PipeDream figure(7, std::vector<Cell>{{1, 1}, {1, 2}, {1, 5}, {2, 2}, {2, 3},
                                                {3, 3}, {3, 4}, {4, 2}, {4, 3}, {5, 1},
                                                {6, 1}});
    for (auto _ : state) {
        const TraceResult t = trace(figure);
        benchmark::DoNotOptimize(t.weight().data());
    }
}
BENCHMARK(BM_Trace);

void BM_EnumeratePipeDreams(benchmark::State& state) {
    const Permutation w = Permutation::parse("3162754");
    for (auto _ : state) {
        long count = 0;
        for_each_pipe_dream(w, [&](const PipeDream&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumeratePipeDreams);

void BM_EnumerateReducedOnly(benchmark::State& state) {
    const Permutation w = Permutation::parse("3162754");
    for (auto _ : state) {
        long count = 0;
        for_each_pipe_dream(w, [&](const PipeDream&) { ++count; },
                            PipeDreamFilter::reduced_only);
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateReducedOnly);

void BM_GrothendieckSupport(benchmark::State& state) {
    const Permutation w = layered_from_blocks({3, 3});
    for (auto _ : state) {
        const LatticePointSet s = grothendieck_from_pipe_dreams(w).support();
        benchmark::DoNotOptimize(s.size());
    }
}
BENCHMARK(BM_GrothendieckSupport);

void BM_SupportFormulaCheck(benchmark::State& state) {
    const Permutation w = Permutation::parse("31542");
    for (auto _ : state) {
        const CheckReport report = check_support_formula(w);
        benchmark::DoNotOptimize(report.ok);
    }
}
BENCHMARK(BM_SupportFormulaCheck);

void BM_RaiseToMaximum(benchmark::State& state) {
    const Permutation w = Permutation::parse("3162754");
    const PipeDream start =
        enumerate_pipe_dreams(w, PipeDreamFilter::reduced_only).front();
    const WeightVector target = fireworks_max_weight(w);
    for (auto _ : state) {
        const PipeDream q = raise_to(start, w, target);
        benchmark::DoNotOptimize(q.cross_count());
    }
}
BENCHMARK(BM_RaiseToMaximum);

void BM_MConvexCheck(benchmark::State& state) {
    const Permutation w = layered_from_blocks({2, 2, 2});
    const LatticePointSet support = grothendieck_from_pipe_dreams(w).support();
    const WeightVector cap = fireworks_max_weight(w);
    const LatticePointSet homogenized =
        homogenize_support(support, std::accumulate(cap.begin(), cap.end(), 0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_m_convex(homogenized));
    }
}
BENCHMARK(BM_MConvexCheck);

}  // namespace

BENCHMARK_MAIN();

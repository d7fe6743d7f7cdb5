#include "dofrs/fme.hpp"
#include "dofrs/lp.hpp"
#include "dofrs/profile.hpp"
#include "dofrs/regions.hpp"
#include "dofrs/verification.hpp"
#include "dofrs/vertices.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace dofrs;

model::CsitProfile bench_profile(int users) {
    std::mt19937_64 rng(7 + users);
    return model::random_profile(users, rng);
}

void BM_ProjectPairwise(benchmark::State& state) {
    const int K = static_cast<int>(state.range(0));
    model::CsitProfile profile = bench_profile(K);
    InequalitySystem rs9 = model::rs_after_power_elim(profile);
    std::vector<VarId> order;
    for (int i = 1; i <= K; ++i) order.push_back(common_var(i));
    for (auto _ : state) {
        auto projected = fme::project(rs9, order, fme::PruneMode::Pairwise);
        benchmark::DoNotOptimize(projected);
    }
}
BENCHMARK(BM_ProjectPairwise)->DenseRange(2, 6);

void BM_PruneFullOuterBound(benchmark::State& state) {
    const int K = static_cast<int>(state.range(0));
    InequalitySystem outer = model::outer_bound(bench_profile(K));
    for (auto _ : state) {
        auto minimal = fme::prune(outer, fme::PruneMode::Full);
        benchmark::DoNotOptimize(minimal);
    }
}
BENCHMARK(BM_PruneFullOuterBound)->DenseRange(2, 6);

void BM_SumDofLp(benchmark::State& state) {
    const int K = static_cast<int>(state.range(0));
    model::CsitProfile profile = bench_profile(K);
    InequalitySystem outer = model::outer_bound(profile);
    std::map<VarId, Rational> objective;
    for (int i = 1; i <= K; ++i) objective[dof_var(i)] = 1;
    for (auto _ : state) {
        auto opt = geometry::maximize(outer, objective);
        benchmark::DoNotOptimize(opt);
    }
}
BENCHMARK(BM_SumDofLp)->DenseRange(2, 6);

void BM_EnumerateVertices(benchmark::State& state) {
    const int K = static_cast<int>(state.range(0));
    InequalitySystem outer = model::outer_bound(bench_profile(K));
    for (auto _ : state) {
        auto vs = geometry::enumerate_vertices(outer);
        benchmark::DoNotOptimize(vs);
    }
}
BENCHMARK(BM_EnumerateVertices)->DenseRange(2, 5);

void BM_VerifyPipeline(benchmark::State& state) {
    const int K = static_cast<int>(state.range(0));
    model::CsitProfile profile = bench_profile(K);
    for (auto _ : state) {
        auto report = verification::run_verification(profile.alphas);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_VerifyPipeline)->DenseRange(2, 5);

}  // namespace

BENCHMARK_MAIN();

// Serial reference vs OpenMP path for the hot kernels.  The second benchmark
// argument selects the path: 0 = serial, 1 = parallel.
#include <benchmark/benchmark.h>

#include <map>

#include "rea/hrep.hpp"
#include "rea/identities.hpp"
#include "rea/rea_algebra.hpp"

using namespace rea;

namespace {

HWModuleSpec spec3(int depth) {
    HWModuleSpec s;
    s.N = 3;
    s.eps = {1, -1, 1};
    s.r = {0.2, 0.5, 0.5};
    s.D = depth;
    s.q0 = 0.5;
    s.margin = 8;
    return s;
}

const HermitianRep& cached_rep(int depth) {
    static std::map<int, HermitianRep> reps;
    auto it = reps.find(depth);
    if (it == reps.end()) it = reps.emplace(depth, build_bigcell_rep(spec3(depth), true)).first;
    return it->second;
}

void bm_apply_to_interior(benchmark::State& st) {
    const HermitianRep& rep = cached_rep(static_cast<int>(st.range(0)));
    const bool par = st.range(1) != 0;
    const NCPoly ch = cayley_hamilton_entry(3, 1, 2);
    for (auto _ : st) benchmark::DoNotOptimize(apply_to_interior(ch, rep, par));
}

void bm_build_hw_module(benchmark::State& st) {
    const HWModuleSpec s = spec3(static_cast<int>(st.range(0)));
    const bool par = st.range(1) != 0;
    for (auto _ : st) benchmark::DoNotOptimize(build_hw_module(s, par));
}

void bm_verify_rep(benchmark::State& st) {
    const HermitianRep& rep = cached_rep(static_cast<int>(st.range(0)));
    const bool par = st.range(1) != 0;
    for (auto _ : st) benchmark::DoNotOptimize(verify_rep(rep, 1e-9, par));
}

void bm_straighten(benchmark::State& st) {
    TriEmbedding emb(3, {1, 1, 1});
    const NCPoly e = emb.embed(central_sigma(static_cast<int>(st.range(0)), 3));
    const bool par = st.range(1) != 0;
    for (auto _ : st) {
        // A fresh system each round so the memo does not hide the work.
        RewriteSystem sys = emb.system();
        benchmark::DoNotOptimize(par ? straighten_parallel(e, sys) : straighten(e, sys));
    }
}

void bm_identity_suite(benchmark::State& st) {
    SuiteOptions opt;
    opt.parallel = st.range(1) != 0;
    const int N = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(identity_suite(N, opt));
}

}  // namespace

BENCHMARK(bm_apply_to_interior)->ArgsProduct({{12, 16}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_build_hw_module)->ArgsProduct({{12, 16}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_verify_rep)->ArgsProduct({{12}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_straighten)->ArgsProduct({{2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_identity_suite)->ArgsProduct({{2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

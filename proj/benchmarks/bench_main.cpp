#include <benchmark/benchmark.h>

#include "postlie/catalog.hpp"
#include "postlie/fdalgebra.hpp"
#include "postlie/pstruct.hpp"
#include "postlie/trees.hpp"

using namespace postlie;

static void BM_star_power(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Envelope env(FieldDesc::make(7));
    const EnvElt x = env.from_tree(leaf());
    for (auto _ : state)
        benchmark::DoNotOptimize(env.star_power(x, n));
}
BENCHMARK(BM_star_power)->DenseRange(3, 7);

static void BM_L_of_x(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    Envelope env(FieldDesc::make(static_cast<std::uint32_t>(p)));
    for (auto _ : state)
        benchmark::DoNotOptimize(env.L_of_x(p));
}
BENCHMARK(BM_L_of_x)->Arg(2)->Arg(3)->Arg(5);

static void BM_P_lambda_hook(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    const int n = p - 1;  // parts of the hook (1,...,1,2) sum to p
    FreeLie L(FieldDesc::make(static_cast<std::uint32_t>(p)), n);
    std::vector<int> lambda(static_cast<std::size_t>(n) - 1, 1);
    lambda.push_back(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(P_lambda(lambda, L));
}
BENCHMARK(BM_P_lambda_hook)->Arg(3)->Arg(5)->Arg(7);

static void BM_eval_pmap(benchmark::State& state) {
    FieldDesc F = FieldDesc::make(3);
    FdAlgebra A = catalog_build("heisenberg-p3", {F.one(), F.from_int(2), F.one()});
    Vec x = {F.one(), F.from_int(2), F.one()};
    for (auto _ : state)
        benchmark::DoNotOptimize(eval_pmap(A, x));
}
BENCHMARK(BM_eval_pmap);

static void BM_sub_adjacent_pmap_fd(benchmark::State& state) {
    FieldDesc F = FieldDesc::make(3);
    FdAlgebra A = catalog_build("heisenberg-p3", {F.one(), F.from_int(2), F.one()});
    FdContext ctx{&A};
    Vec x = {F.one(), F.from_int(2), F.one()};
    for (auto _ : state)
        benchmark::DoNotOptimize(sub_adjacent_pmap(ctx, x));
}
BENCHMARK(BM_sub_adjacent_pmap_fd);

BENCHMARK_MAIN();

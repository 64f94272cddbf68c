#include "gen.hpp"

#include "gradix/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace gradix;

namespace {

struct Operands {
    HomSpaceMatrix A, B;
};

Operands operands(int n)
{
    gen::Rng rng(static_cast<std::uint64_t>(n));
    auto D = gen::f5_c2();
    auto A = gen::random_matrix(D, n, n, rng, 1.0);
    auto B = gen::random_matrix_rows(D, A.beta(), n, rng);
    return {A, B};
}

void BM_HomMulSerial(benchmark::State& st)
{
    auto op = operands(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::hom_mul_serial(op.A, op.B));
}

void BM_HomMulParallel(benchmark::State& st)
{
    auto op = operands(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::hom_mul_parallel(op.A, op.B));
}

HomSpaceMatrix rank_operand(int n)
{
    gen::Rng rng(static_cast<std::uint64_t>(100 + n));
    return gen::random_matrix_mixed(gen::two_object_prime(), n, n, rng);
}

void BM_MinorRankSerial(benchmark::State& st)
{
    auto A = rank_operand(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::minor_rank_serial(A));
}

void BM_MinorRankParallel(benchmark::State& st)
{
    auto A = rank_operand(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::minor_rank_parallel(A));
}

}  // namespace

BENCHMARK(BM_HomMulSerial)->RangeMultiplier(2)->Range(8, 64);
BENCHMARK(BM_HomMulParallel)->RangeMultiplier(2)->Range(8, 64);
BENCHMARK(BM_MinorRankSerial)->DenseRange(3, 6);
BENCHMARK(BM_MinorRankParallel)->DenseRange(3, 6);

BENCHMARK_MAIN();

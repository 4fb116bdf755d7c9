#include "xxz/det/gmatrix.hpp"
#include "xxz/det/script_s.hpp"
#include "xxz/qkz/solver.hpp"
#include "xxz/spin/transfer.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace xxz;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

void BM_TransferSector(benchmark::State& st) {
    const int N = static_cast<int>(st.range(1));
    std::vector<Cyclotomic3> z;
    for (int i = 0; i < N; ++i) z.push_back(Cyclotomic3(make_rational(i + 2, 3)));
    for (auto _ : st)
        benchmark::DoNotOptimize(transfer_matrix_sector(5, z, default_twist(N), N / 2, exec_of(st)));
}
BENCHMARK(BM_TransferSector)->ArgsProduct({{0, 1}, {6, 8}})->Unit(benchmark::kMillisecond);

void BM_QkzSolve(benchmark::State& st) {
    const int N = static_cast<int>(st.range(1));
    const Mu mu = N % 2 ? Mu::minus : Mu::e;
    for (auto _ : st) benchmark::DoNotOptimize(solve_qkz<GenericQ>(mu, N, {exec_of(st), false}));
}
BENCHMARK(BM_QkzSolve)->ArgsProduct({{0, 1}, {5, 6}})->Unit(benchmark::kMillisecond);

void BM_BareissRational(benchmark::State& st) {
    const std::size_t n = static_cast<std::size_t>(st.range(1));
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    RingMatrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = make_rational(num(rng), den(rng));
    for (auto _ : st) benchmark::DoNotOptimize(det_bareiss(m, exec_of(st)));
}
BENCHMARK(BM_BareissRational)->ArgsProduct({{0, 1}, {16, 32}})->Unit(benchmark::kMillisecond);

void BM_ScriptSLaplace(benchmark::State& st) {
    const int k = static_cast<int>(st.range(1));
    auto ro = staircase_roster(4, k);
    for (auto _ : st) benchmark::DoNotOptimize(staircase_script_s(0, 1, 4, k, ro, exec_of(st)));
}
BENCHMARK(BM_ScriptSLaplace)->ArgsProduct({{0, 1}, {1, 2}})->Unit(benchmark::kMillisecond);

void BM_GDetSuite(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(g_det_suite(7, 50, 3, exec_of(st)));
}
BENCHMARK(BM_GDetSuite)->ArgsProduct({{0, 1}, {0}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

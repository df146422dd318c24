#include <benchmark/benchmark.h>

#include "aqfock/density.hpp"
#include "aqfock/fock1.hpp"
#include "aqfock/jacobi.hpp"
#include "aqfock/radial.hpp"
#include "aqfock/typeb.hpp"

using namespace aqfock;

static void BM_QPochhammerInf(benchmark::State& state) {
    const double q = 1.0 - 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(q_pochhammer_inf(0.5, q));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_QPochhammerInf)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

static void BM_RogersSzegoSum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rogers_szego(n, -1.5, 0.9));
}
BENCHMARK(BM_RogersSzegoSum)->Arg(10)->Arg(30)->Arg(100);

static void BM_RogersSzegoRec(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rogers_szego_rec(n, -1.5, 0.9));
}
BENCHMARK(BM_RogersSzegoRec)->Arg(10)->Arg(30)->Arg(100);

static void BM_RadialMeasure(benchmark::State& state) {
    const double q = static_cast<double>(state.range(0)) / 100.0;
    const QParams p(-0.5, q);
    for (auto _ : state) benchmark::DoNotOptimize(rho_nu_alpha_q(p));
}
BENCHMARK(BM_RadialMeasure)->Arg(50)->Arg(90)->Arg(95);

static void BM_MomentsFromJacobi(benchmark::State& state) {
    const QParams p(-0.4, 0.3);
    const int k = static_cast<int>(state.range(0));
    const JacobiSequence J = mp_jacobi(p, k / 2 + 1);
    for (auto _ : state) benchmark::DoNotOptimize(moments_from_jacobi(J, k));
}
BENCHMARK(BM_MomentsFromJacobi)->Arg(12)->Arg(40);

static void BM_NuDensity(benchmark::State& state) {
    const QParams p(-0.5, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(nu_density(0.7, p));
}
BENCHMARK(BM_NuDensity);

static void BM_OrthogonalityPair(benchmark::State& state) {
    const QParams p(-0.5, 0.5);
    const JacobiSequence J = mp_jacobi(p, 7);
    const MonicPolynomial p5 = polynomial(J, 5), p6 = polynomial(J, 6);
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate([&](double x) { return p5(x) * p6(x); }, p, {}, 400));
}
BENCHMARK(BM_OrthogonalityPair);

static void BM_EnumerateGroup(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_group(n));
}
BENCHMARK(BM_EnumerateGroup)->DenseRange(3, 5);

static void BM_AqGramDiagonal(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const QParams p(-0.4, 0.3);
    const Involution J = Involution::Identity(2, 2);
    const SimpleTensor fn(static_cast<std::size_t>(n), Eigen::VectorXd::Unit(2, 0));
    for (auto _ : state) benchmark::DoNotOptimize(aq_gram({fn}, p, J));
}
BENCHMARK(BM_AqGramDiagonal)->DenseRange(2, 4);

static void BM_CheckCommutation(benchmark::State& state) {
    const QParams p(0.5, -0.5);
    const Involution J = Involution::Identity(2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(check_commutation(p, 2, static_cast<int>(state.range(0)), J));
}
BENCHMARK(BM_CheckCommutation)->Arg(1)->Arg(2);

BENCHMARK_MAIN();

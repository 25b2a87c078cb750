#include <benchmark/benchmark.h>

#include "modeq/eliminate.hpp"
#include "modeq/hecke.hpp"
#include "modeq/io.hpp"
#include "modeq/pipeline.hpp"
#include "modeq/symmetric.hpp"

using namespace modeq;

namespace {

const std::string kData = MODEQ_DATA_DIR;

struct Fixtures {
    CurveData curve = load_curve(kData + "/d10/curve.txt");
    HeckeTable t3 = load_hecke(kData + "/d10/hecke_t3.txt");
    EigenTransferMap maps = load_eigenmap(kData + "/d10/eigenmap_t3_t7.txt");
    SchwarzianODE ode = build_Q(curve);
    PsiFunction psi;
    BiPoly reversed{"z", "y"};
    BiPoly resultant{"x", "y"};

    Fixtures() {
        const HeckeTable t7 = hecke_transfer_table(t3, maps);
        const PowerSums sums = power_sums(curve, 7, 4, t7);
        psi = build_psi(newton_to_elementary(sums.sums));
        reversed = reverse_psi(psi);
        resultant = resultant_z(psi.psi, reversed);
    }
};

const Fixtures& fixtures() {
    static const Fixtures f;
    return f;
}

}  // namespace

static void BM_FrobeniusSeries(benchmark::State& state) {
    const auto& f = fixtures();
    for (auto _ : state) {
        auto s = frobenius_series(f.ode, f.curve.points[0], Rational(1, 3), state.range(0));
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_FrobeniusSeries)->Arg(4)->Arg(15)->Arg(40);

static void BM_HeckeTransfer(benchmark::State& state) {
    const auto& f = fixtures();
    for (auto _ : state) {
        auto t = hecke_transfer_table(f.t3, f.maps);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_HeckeTransfer);

static void BM_PowerSumsToPsi(benchmark::State& state) {
    const auto& f = fixtures();
    const HeckeTable t7 = hecke_transfer_table(f.t3, f.maps);
    for (auto _ : state) {
        const PowerSums sums = power_sums(f.curve, 7, 4, t7);
        auto psi = build_psi(newton_to_elementary(sums.sums));
        benchmark::DoNotOptimize(psi);
    }
}
BENCHMARK(BM_PowerSumsToPsi);

static void BM_Resultant16x16(benchmark::State& state) {
    const auto& f = fixtures();
    for (auto _ : state) {
        auto r = resultant_z(f.psi.psi, f.reversed);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Resultant16x16)->Unit(benchmark::kMillisecond);

static void BM_StripAndFactorCore(benchmark::State& state) {
    const auto& f = fixtures();
    for (auto _ : state) {
        auto fact = factor_bivariate_full(f.resultant);
        benchmark::DoNotOptimize(fact);
    }
}
BENCHMARK(BM_StripAndFactorCore)->Unit(benchmark::kMillisecond);

static void BM_FactorUnivariateDiagonal(benchmark::State& state) {
    const auto& f = fixtures();
    static const UniPoly diag = [] {
        const PhiFile phi = load_phi(kData + "/d10/phi7_known.txt");
        return phi.phi.diagonal();
    }();
    (void)f;
    for (auto _ : state) {
        auto fl = factor_univariate(diag);
        benchmark::DoNotOptimize(fl);
    }
}
BENCHMARK(BM_FactorUnivariateDiagonal)->Unit(benchmark::kMillisecond);

static void BM_EndToEndModeq(benchmark::State& state) {
    JobConfig config;
    config.mode = Mode::modeq;
    config.curve_path = kData + "/d10/curve.txt";
    config.hecke_paths = {kData + "/d10/hecke_t3.txt"};
    config.eigenmap_path = kData + "/d10/eigenmap_t3_t7.txt";
    config.prime = 7;
    config.base_prime = 3;
    for (auto _ : state) {
        auto result = run_modeq(config, nullptr);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_EndToEndModeq)->Unit(benchmark::kMillisecond)->Iterations(3);

BENCHMARK_MAIN();

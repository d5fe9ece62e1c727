#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "wqed/closed_form.hpp"
#include "wqed/kernels.hpp"
#include "wqed/quadrature.hpp"
#include "wqed/solver.hpp"
#include "wqed/specfun.hpp"

using std::numbers::pi;
using Complex = std::complex<double>;

namespace {

wqed::ChainConfig unit_chain(std::size_t n, double k0d) {
    wqed::ChainConfig c;
    c.omega_q = 1.0;
    c.vg = 1.0;
    c.gamma_ratio = 0.1;
    for (std::size_t i = 0; i < n; ++i) c.positions.push_back(i * k0d);
    return c;
}

wqed::PulseSpec unit_pulse() {
    wqed::PulseSpec p;
    p.omega_s = 1.0;
    p.delta = 0.1;
    p.x0 = 10.0;
    p.vg = 1.0;
    return p;
}

}  // namespace

static void SineIntegral(benchmark::State& state) {
    double x = 0.11;
    for (auto _ : state) {
        benchmark::DoNotOptimize(wqed::specfun::sine_integral(x));
        x = x < 60.0 ? x * 1.07 : 0.11;  // sweep both evaluation regimes
    }
}
BENCHMARK(SineIntegral);

static void GKernel(benchmark::State& state) {
    double kd = 0.02;
    for (auto _ : state) {
        benchmark::DoNotOptimize(wqed::kernels::g_kernel(kd));
        kd = kd < 30.0 ? kd * 1.13 : 0.02;
    }
}
BENCHMARK(GKernel);

static void PvHalfline(benchmark::State& state) {
    const auto pulse = unit_pulse();
    auto f = [&](double w) -> Complex { return wqed::gaussian_amplitude(w, pulse); };
    wqed::quadrature::Options o;
    o.smooth_scale = pulse.delta;
    for (auto _ : state) {
        benchmark::DoNotOptimize(wqed::quadrature::pv_halfline(f, 1.02, 2.2, o));
    }
}
BENCHMARK(PvHalfline);

static void DriveTerm(benchmark::State& state) {
    const auto chain = unit_chain(2, 2.25 * pi);
    const auto pulse = unit_pulse();
    for (auto _ : state) {
        benchmark::DoNotOptimize(wqed::kernels::drive_term(1.01, 1, chain, pulse));
    }
}
BENCHMARK(DriveTerm);

static void SolveBetaPerFrequency(benchmark::State& state) {
    const auto chain = unit_chain(static_cast<std::size_t>(state.range(0)), 0.8 * pi);
    const auto pulse = unit_pulse();
    const std::vector<double> node{1.005};
    for (auto _ : state) {
        benchmark::DoNotOptimize(wqed::solver::solve_beta(chain, pulse, node));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(SolveBetaPerFrequency)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

static void PairSpectrumPoint(benchmark::State& state) {
    const auto chain = unit_chain(2, 2.25 * pi);
    const auto pulse = unit_pulse();
    const std::vector<double> node{0.97};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            wqed::closed_form::spectra_pair_exact(chain, pulse, node));
    }
}
BENCHMARK(PairSpectrumPoint);

static void FourierSegmentRule(benchmark::State& state) {
    const std::size_t n = 4001;
    std::vector<double> w(n);
    std::vector<Complex> f(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = 0.5 + 1.0 * static_cast<double>(i) / (n - 1);
        f[i] = std::exp(-(w[i] - 1.0) * (w[i] - 1.0) / 0.01) *
               std::exp(Complex(0.0, 12.0 * w[i]));
    }
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(wqed::quadrature::fourier_integral_linear(w, f, t));
        t += 17.0;
        if (t > 2000.0) t = 0.0;
    }
}
BENCHMARK(FourierSegmentRule);

BENCHMARK_MAIN();

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "wqed/kernels.hpp"
#include "wqed/specfun.hpp"

namespace kernels = wqed::kernels;
using kernels::Complex;
using std::numbers::pi;

namespace {

wqed::ChainConfig unit_chain(double gamma_ratio, std::vector<double> positions,
                             wqed::CouplingMode mode = wqed::CouplingMode::WWConstant) {
    wqed::ChainConfig c;
    c.omega_q = 1.0;
    c.vg = 1.0;
    c.gamma_ratio = gamma_ratio;
    c.positions = std::move(positions);
    c.coupling_mode = mode;
    return c;
}

wqed::PulseSpec unit_pulse(double delta, double omega_s = 1.0, double t0 = 0.0) {
    wqed::PulseSpec p;
    p.omega_s = omega_s;
    p.delta = delta;
    p.x0 = t0;
    p.vg = 1.0;
    return p;
}

}  // namespace

TEST_CASE("coupling_g: constant and linear modes") {
    const auto ww = unit_chain(0.1, {0.0});
    CHECK(kernels::coupling_g(0.7, ww) == doctest::Approx(std::sqrt(0.1 / (4.0 * pi))));
    CHECK(kernels::coupling_g(0.7, ww) == doctest::Approx(0.0892062).epsilon(1e-5));
    CHECK(kernels::coupling_g(1.3, ww) == kernels::coupling_g(0.7, ww));

    const auto lin = unit_chain(0.1, {0.0}, wqed::CouplingMode::LinearInOmega);
    CHECK(kernels::coupling_g(1.0, lin) == doctest::Approx(kernels::coupling_g(1.0, ww)));
    // Gamma(omega)/Gamma(Omega) = omega/Omega in the linear mode.
    for (double w : {0.25, 0.5, 2.0}) {
        CHECK(kernels::gamma_rate(w, lin) / kernels::gamma_rate(1.0, lin) ==
              doctest::Approx(w).epsilon(1e-12));
    }
    CHECK_THROWS_AS((void)kernels::coupling_g(0.0, ww), std::domain_error);
    CHECK_THROWS_AS((void)kernels::coupling_g(-1.0, lin), std::domain_error);
}

TEST_CASE("g_kernel: paper anchor at small separation") {
    CHECK(kernels::g_kernel(0.01) == doctest::Approx(-1.28).epsilon(0.01 / 1.28));
}

TEST_CASE("g_kernel: even parity, exactly") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> mag(-2.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double x = std::pow(10.0, mag(rng));
        CHECK(kernels::g_kernel(-x) == kernels::g_kernel(x));
    }
    CHECK_THROWS_AS((void)kernels::g_kernel(0.0), std::domain_error);
}

TEST_CASE("g_kernel: agrees with the direct-integral oracle") {
    for (double kd : {pi / 4.0, pi / 2.0, pi, 2.0 * pi}) {
        CHECK(std::abs(kernels::g_kernel(kd) - oracles::g_kernel_direct(kd)) < 1e-3);
    }
}

TEST_CASE("g_kernel: decays past the first wavelength") {
    for (int i = 0; i <= 100; ++i) {
        const double kd = 2.0 * pi + i * 0.1;
        CHECK(std::abs(kernels::g_kernel(kd)) < 0.1);
    }
}

TEST_CASE("g_kernel: logarithmic growth toward kd = 0") {
    using wqed::specfun::kEulerGamma;
    CHECK(kernels::g_kernel(0.001) < kernels::g_kernel(0.01));  // more negative
    CHECK(kernels::g_kernel(0.001) < -1.9);
    const double ratio = kernels::g_kernel(0.01) / kernels::g_kernel(0.001);
    const double series =
        (kEulerGamma + std::log(0.01)) / (kEulerGamma + std::log(0.001));
    CHECK(ratio == doctest::Approx(series).epsilon(0.02));
}

TEST_CASE("drive_term: reproduces the explicit pair drives") {
    const auto chain = unit_chain(0.1, {0.0, 3.5});
    const auto pulse = unit_pulse(0.1, 1.0, 5.0);
    const double g = kernels::coupling_g(1.0, chain);
    wqed::quadrature::Options quad;
    quad.smooth_scale = pulse.delta;

    for (double nu : {0.95, 1.0, 1.04}) {
        // C_1: qubit at x = 0.
        auto f1 = [&](double w) -> Complex { return g * gaussian_amplitude(w, pulse); };
        const Complex c1 = pi * g * gaussian_amplitude(nu, pulse) +
                           Complex(0.0, 1.0) *
                               wqed::quadrature::pv_halfline(
                                   f1, nu, kernels::drive_cutoff(pulse, nu), quad);
        CHECK(std::abs(kernels::drive_term(nu, 0, chain, pulse) - c1) < 1e-9);

        // C_2: qubit at x = d carries e^{i k w x} inside the PV integrand.
        auto f2 = [&](double w) -> Complex {
            return g * gaussian_amplitude(w, pulse) * std::exp(Complex(0.0, w * 3.5));
        };
        const Complex c2 =
            pi * g * gaussian_amplitude(nu, pulse) * std::exp(Complex(0.0, nu * 3.5)) +
            Complex(0.0, 1.0) *
                wqed::quadrature::pv_halfline(f2, nu, kernels::drive_cutoff(pulse, nu), quad);
        CHECK(std::abs(kernels::drive_term(nu, 1, chain, pulse) - c2) < 1e-9);
    }
}

TEST_CASE("drive_term: DeltaLimit transfer factor") {
    const auto chain = unit_chain(0.1, {0.0, 2.0});
    wqed::PulseSpec p;
    p.shape = wqed::PulseShape::DeltaLimit;
    p.omega_s = 1.0;
    p.vg = 1.0;
    for (double nu : {0.9, 1.0, 1.2}) {
        const double g = kernels::coupling_g(nu, chain);
        const Complex want0 = 2.0 * pi * g;
        const Complex want1 = 2.0 * pi * g * std::exp(Complex(0.0, nu * 2.0));
        CHECK(std::abs(kernels::drive_term(nu, 0, chain, p) - want0) < 1e-12);
        CHECK(std::abs(kernels::drive_term(nu, 1, chain, p) - want1) < 1e-12);
    }
}

TEST_CASE("drive_term: distant pulses approach the narrow-pulse drive") {
    // For x0 much larger than the spatial width the PV term reconstructs the
    // local part: |drive| -> 2 pi g |gamma_0| across the resonance window.
    const auto chain = unit_chain(0.1, {0.0});
    const auto pulse = unit_pulse(0.1, 1.0, 42.0);  // t0*Delta ~ 4.2 widths
    const double g = kernels::coupling_g(1.0, chain);
    for (int i = 0; i <= 16; ++i) {
        const double nu = 1.0 - 0.2 + 0.4 * i / 16.0;  // +-2 Delta
        const double got = std::abs(kernels::drive_term(nu, 0, chain, pulse));
        const double want = 2.0 * pi * g * std::abs(gaussian_amplitude(nu, pulse));
        CHECK(got == doctest::Approx(want).epsilon(0.05));
    }
}

TEST_CASE("drive_term: linear in the pulse amplitude") {
    // Doubling gamma_0 doubles the drive: assembled directly from quadrature.
    const auto chain = unit_chain(0.05, {0.0});
    const auto pulse = unit_pulse(0.2, 1.1, 2.0);
    const double g = kernels::coupling_g(1.0, chain);
    wqed::quadrature::Options quad;
    quad.smooth_scale = pulse.delta;
    const double nu = 1.05;
    const Complex scale{2.0, -1.0};
    auto scaled = [&](double w) -> Complex {
        return scale * g * gaussian_amplitude(w, pulse);
    };
    const Complex direct =
        scale * pi * g * gaussian_amplitude(nu, pulse) +
        Complex(0.0, 1.0) *
            wqed::quadrature::pv_halfline(scaled, nu, kernels::drive_cutoff(pulse, nu), quad);
    CHECK(std::abs(direct - scale * kernels::drive_term(nu, 0, chain, pulse)) < 1e-10);
}

TEST_CASE("drive_term: --no-pv diagnostic keeps only the local part") {
    const auto chain = unit_chain(0.1, {0.0});
    const auto pulse = unit_pulse(0.1, 1.0, 1.0);
    kernels::DriveOptions opts;
    opts.include_pv = false;
    const double nu = 1.02;
    const double g = kernels::coupling_g(nu, chain);
    const Complex want = pi * g * gaussian_amplitude(nu, pulse);
    CHECK(std::abs(kernels::drive_term(nu, 0, chain, pulse, opts) - want) < 1e-14);
}

TEST_CASE("ChainConfig validation") {
    auto ok = unit_chain(0.1, {0.0, 1.0});
    CHECK_NOTHROW(ok.validate());
    auto bad = ok;
    bad.gamma_ratio = 0.0;
    CHECK_THROWS_AS(bad.validate(), wqed::ConfigError);
    bad = ok;
    bad.gamma_ratio = 1.0;
    CHECK_THROWS_AS(bad.validate(), wqed::ConfigError);
    bad = ok;
    bad.positions = {1.0, 1.0};
    CHECK_THROWS_AS(bad.validate(), wqed::ConfigError);
    bad = ok;
    bad.positions = {0.0, 1e-9};  // k0 dx below the Ci guard
    CHECK_THROWS_AS(bad.validate(), wqed::ConfigError);
    bad = ok;
    bad.positions.clear();
    CHECK_THROWS_AS(bad.validate(), wqed::ConfigError);

    // SI chain normalizes to k0 x positions.
    wqed::ChainConfig si;
    si.omega_q = 2.0 * pi * 5e9;
    si.vg = 3e8;
    si.gamma_ratio = 0.1;
    si.positions = {0.0, 0.5};
    const auto n = normalized(si);
    CHECK(n.omega_q == 1.0);
    CHECK(n.positions[1] == doctest::Approx(si.k0() * 0.5).epsilon(1e-14));
}

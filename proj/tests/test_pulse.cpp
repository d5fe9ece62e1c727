#include <doctest.h>

#include <cmath>
#include <numbers>

#include "wqed/pulse.hpp"

using wqed::FrequencyGrid;
using wqed::gaussian_amplitude;
using wqed::PulseShape;
using wqed::PulseSpec;

namespace {

PulseSpec si_pulse(double delta_ratio, double omega_s_ratio = 1.0, double x0 = 0.0) {
    // Paper-scale SI parameters: Omega/2pi = 5 GHz, vg = 3e8 m/s.
    const double omega_q = 2.0 * std::numbers::pi * 5e9;
    PulseSpec p;
    p.omega_s = omega_s_ratio * omega_q;
    p.delta = delta_ratio * omega_q;
    p.x0 = x0;
    p.vg = 3e8;
    return p;
}

}  // namespace

TEST_CASE("gaussian_amplitude: carrier value and symmetry") {
    PulseSpec p;
    p.omega_s = 1.0;
    p.delta = 0.1;
    p.x0 = 0.7;
    p.vg = 1.0;
    const auto at_carrier = gaussian_amplitude(p.omega_s, p);
    const double want = std::pow(2.0 / (std::numbers::pi * p.delta * p.delta), 0.25);
    CHECK(at_carrier.real() == doctest::Approx(want).epsilon(1e-14));
    CHECK(at_carrier.imag() == 0.0);

    for (double du : {0.01, 0.05, 0.2}) {
        CHECK(std::abs(gaussian_amplitude(p.omega_s + du, p)) ==
              doctest::Approx(std::abs(gaussian_amplitude(p.omega_s - du, p))).epsilon(1e-13));
    }
}

TEST_CASE("gaussian pulse: spatial width at paper parameters") {
    const auto p = si_pulse(0.1);
    const double dx = p.vg / p.delta;
    CHECK(dx == doctest::Approx(0.09549).epsilon(1e-3));  // ~10 cm
}

TEST_CASE("x0 changes only the phase of gamma_0") {
    PulseSpec near = si_pulse(0.1, 1.0, 0.0);
    PulseSpec far = si_pulse(0.1, 1.0, 0.4);
    for (int i = 0; i <= 20; ++i) {
        const double w = near.omega_s * (0.9 + 0.01 * i);
        CHECK(std::abs(gaussian_amplitude(w, near)) ==
              doctest::Approx(std::abs(gaussian_amplitude(w, far))).epsilon(1e-13));
    }
}

TEST_CASE("DeltaLimit specs are never evaluated pointwise") {
    PulseSpec p;
    p.shape = PulseShape::DeltaLimit;
    p.omega_s = 1.0;
    p.vg = 1.0;
    CHECK_THROWS_AS((void)gaussian_amplitude(1.0, p), std::domain_error);
    FrequencyGrid g{0.5, 1.5, 2001};
    CHECK_THROWS_AS((void)pulse_norm(p, g), std::domain_error);
}

TEST_CASE("gaussian_amplitude: negative frequency is a domain error") {
    PulseSpec p;
    p.omega_s = 1.0;
    p.delta = 0.1;
    p.vg = 1.0;
    CHECK_THROWS_AS((void)gaussian_amplitude(-0.1, p), std::domain_error);
    CHECK_NOTHROW((void)gaussian_amplitude(0.0, p));
}

TEST_CASE("pulse_norm: unit norm inside the band, clipped tail when wide") {
    PulseSpec p;
    p.omega_s = 1.0;
    p.delta = 0.1;
    p.vg = 1.0;
    const FrequencyGrid g{0.0, 2.2, 4001};
    CHECK(pulse_norm(p, g) == doctest::Approx(1.0).epsilon(1e-6));

    PulseSpec wide = p;
    wide.delta = 0.5;
    const FrequencyGrid gw{0.0, 7.0, 8001};
    const double clipped = pulse_norm(wide, gw);
    CHECK(clipped < 1.0);
    // High-resolution trapezoid oracle on the same span.
    double oracle = 0.0;
    const int n = 400000;
    double prev = std::norm(gaussian_amplitude(0.0, wide));
    for (int i = 1; i <= n; ++i) {
        const double w = 7.0 * i / n;
        const double cur = std::norm(gaussian_amplitude(w, wide));
        oracle += 0.5 * (prev + cur) * (7.0 / n);
        prev = cur;
    }
    CHECK(clipped == doctest::Approx(oracle).epsilon(1e-8));

    // Doubling the resolution moves the result by < 1e-8.
    const FrequencyGrid g2{0.0, 2.2, 8001};
    CHECK(std::abs(pulse_norm(p, g) - pulse_norm(p, g2)) < 1e-8);
}

TEST_CASE("pulse_norm: unit norm whenever omega_s >= 6 delta") {
    for (double ratio : {6.0, 8.0, 12.0}) {
        PulseSpec p;
        p.delta = 0.15;
        p.omega_s = ratio * p.delta;
        p.vg = 1.0;
        const double hi = p.omega_s + 10.0 * p.delta;
        const FrequencyGrid g{0.0, hi, 8001};
        CHECK(pulse_norm(p, g) == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("pulse_norm: narrow grid is a configuration error") {
    PulseSpec p;
    p.omega_s = 1.0;
    p.delta = 0.1;
    p.vg = 1.0;
    const FrequencyGrid narrow{0.5, 1.5, 2001};  // only 5 sigma
    CHECK_THROWS_AS((void)pulse_norm(p, narrow), wqed::ConfigError);
}

TEST_CASE("PulseSpec validation and normalization") {
    PulseSpec bad;
    bad.omega_s = 0.0;
    bad.delta = 0.1;
    CHECK_THROWS_AS(bad.validate(), wqed::ConfigError);
    bad.omega_s = 1.0;
    bad.delta = -0.1;
    CHECK_THROWS_AS(bad.validate(), wqed::ConfigError);
    bad.delta = 0.1;
    bad.x0 = -1.0;
    CHECK_THROWS_AS(bad.validate(), wqed::ConfigError);

    const auto p = si_pulse(0.1, 1.05, 0.4);
    const double omega_q = 2.0 * std::numbers::pi * 5e9;
    const auto n = normalized(p, omega_q);
    CHECK(n.omega_s == doctest::Approx(1.05).epsilon(1e-12));
    CHECK(n.delta == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(n.vg == 1.0);
    // x0 becomes t0 in 1/Omega units: Omega * x0 / vg.
    CHECK(n.t0() == doctest::Approx(omega_q * 0.4 / 3e8).epsilon(1e-12));
}

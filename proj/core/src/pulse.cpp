#include "wqed/pulse.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wqed {

PulseSpec normalized(const PulseSpec& spec, double omega_q) {
    spec.validate();
    if (!(omega_q > 0.0)) throw ConfigError("normalized(pulse): omega_q must be > 0");
    PulseSpec n = spec;
    n.omega_s = spec.omega_s / omega_q;
    n.delta = spec.delta / omega_q;
    n.x0 = spec.x0 * omega_q / spec.vg;  // = t0 in units of 1/omega_q
    n.vg = 1.0;
    return n;
}

std::complex<double> gaussian_amplitude(double omega, const PulseSpec& spec) {
    if (spec.shape == PulseShape::DeltaLimit) {
        throw std::domain_error(
            "gaussian_amplitude: DeltaLimit pulses are symbolic and cannot be "
            "evaluated pointwise");
    }
    if (omega < 0.0) {
        throw std::domain_error("gaussian_amplitude: omega must be >= 0");
    }
    const double du = omega - spec.omega_s;
    const double amp = std::pow(2.0 / (std::numbers::pi * spec.delta * spec.delta), 0.25);
    const double arg = -du * du / (spec.delta * spec.delta);
    return amp * std::exp(arg) *
           std::complex<double>(std::cos(du * spec.t0()), std::sin(du * spec.t0()));
}

double pulse_norm(const PulseSpec& spec, const FrequencyGrid& grid) {
    spec.validate();
    grid.validate();
    if (spec.shape == PulseShape::DeltaLimit) {
        throw std::domain_error("pulse_norm: undefined for DeltaLimit pulses");
    }
    const double lo_needed = std::max(0.0, spec.omega_s - 10.0 * spec.delta);
    const double hi_needed = spec.omega_s + 10.0 * spec.delta;
    if (grid.lo > lo_needed + 1e-12 || grid.hi < hi_needed - 1e-12) {
        throw ConfigError("pulse_norm: grid does not cover the 10-sigma pulse band");
    }
    // Composite Simpson; n_points is odd by construction.
    const auto w = grid.points();
    const double h = grid.step();
    double sum = std::norm(gaussian_amplitude(w.front(), spec)) +
                 std::norm(gaussian_amplitude(w.back(), spec));
    for (std::size_t i = 1; i + 1 < w.size(); ++i) {
        sum += (i % 2 == 1 ? 4.0 : 2.0) * std::norm(gaussian_amplitude(w[i], spec));
    }
    return sum * h / 3.0;
}

}  // namespace wqed

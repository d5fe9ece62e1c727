// pulse.hpp — Incident single-photon pulse models in the frequency domain

#pragma once

#include <complex>

#include "wqed/grids.hpp"

namespace wqed {

enum class PulseShape { Gaussian, DeltaLimit };

// Frequency-domain description of the incident photon. Fields are in any one
// consistent unit system; solvers normalize to qubit-frequency units once at
// the boundary (see normalized()).
//
// DeltaLimit is a symbolic narrow-pulse mode: the spectral amplitude is never
// evaluated pointwise, solvers branch to the closed-form transfer functions.
struct PulseSpec {
    PulseShape shape = PulseShape::Gaussian;
    double omega_s = 0.0;  // carrier frequency
    double delta = 0.0;    // spectral width (Gaussian only)
    double x0 = 0.0;       // initial distance of the peak to the first qubit
    double vg = 1.0;       // group velocity

    double t0() const { return x0 / vg; }  // arrival time of the peak

    void validate() const {
        if (!(omega_s > 0.0)) throw ConfigError("PulseSpec: omega_s must be > 0");
        if (shape == PulseShape::Gaussian && !(delta > 0.0)) {
            throw ConfigError("PulseSpec: delta must be > 0 for a Gaussian pulse");
        }
        if (!(x0 >= 0.0)) throw ConfigError("PulseSpec: x0 must be >= 0");
        if (!(vg > 0.0)) throw ConfigError("PulseSpec: vg must be > 0");
    }
};

// Same pulse with frequencies measured in units of omega_q and the group
// velocity scaled out (x0 becomes omega_q * x0 / vg, i.e. t0 in 1/omega_q).
PulseSpec normalized(const PulseSpec& spec, double omega_q);

// gamma_0(omega) = (2/(pi Delta^2))^(1/4) exp(i (omega - omega_s) t0
//                                             - (omega - omega_s)^2 / Delta^2).
// Throws std::domain_error for omega < 0 (the axis is positive-frequency
// only) and for DeltaLimit specs (symbolic mode, never evaluated pointwise).
std::complex<double> gaussian_amplitude(double omega, const PulseSpec& spec);

// Integral of |gamma_0|^2 over the grid span, by composite Simpson on the
// grid nodes. The grid must cover [max(0, omega_s - 10 delta),
// omega_s + 10 delta]; narrower grids raise ConfigError.
double pulse_norm(const PulseSpec& spec, const FrequencyGrid& grid);

}  // namespace wqed

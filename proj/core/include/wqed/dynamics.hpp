// dynamics.hpp — Time-domain qubit amplitudes by direct quadrature of the
// inverse Fourier transform of the frequency-domain solution.

#pragma once

#include <span>

#include "wqed/grids.hpp"
#include "wqed/solver.hpp"

namespace wqed::dynamics {

using Complex = std::complex<double>;

struct Options {
    solver::SolveOptions solve;        // drive/quadrature controls for beta(nu)
    double pole_span_linewidths = 40;  // frequency window around each pole
    double pulse_span_sigmas = 10;     // window around the pulse band
};

// beta[q][j]: amplitude of qubit q at t[j] (rotating frame, units of 1/Omega).
struct BetaTimeSeries {
    std::vector<double> t;
    std::vector<std::vector<Complex>> beta;

    std::size_t qubits() const { return beta.size(); }
};

// Internal frequency nodes used for the inverse transform: dense over the
// pulse band (resolving the e^{i nu t0} drive phase), extra dense around
// each Markovian pole (step <= linewidth/100 for subradiant lines), coarse
// over the full pole span.
std::vector<double> inversion_nodes(const ChainConfig& cfg, const PulseSpec& pulse,
                                    const Options& opts = {});

// beta_n(t) = int d nu / (2 pi) beta_n(nu) e^{-i(nu - Omega) t} over the
// positive axis, with beta_n(nu) solved once on the inversion nodes and the
// oscillating kernel integrated segment-exactly. Times before zero return 0.
// Throws ConfigError when the output step cannot resolve the fastest
// retained detuning (max|nu - Omega| * dt > pi).
BetaTimeSeries beta_t_numeric(const ChainConfig& cfg, const PulseSpec& pulse,
                              const TimeGrid& tgrid, const Options& opts = {});

// Norm of the radiated field at finite time from the formal field solution
// truncated at t:  int (|gamma(w,t)|^2 + |delta(w,t)|^2) dw. Approaches 1
// once the qubits have decayed. The series must cover [0, t].
double radiated_norm_at_time(const ChainConfig& cfg, const PulseSpec& pulse,
                             const BetaTimeSeries& series, double t,
                             const Options& opts = {});

}  // namespace wqed::dynamics

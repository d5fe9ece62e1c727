// spectrum.hpp — Spectrum containers and the evaluation-grid builder

#pragma once

#include <complex>
#include <vector>

#include "wqed/chain.hpp"
#include "wqed/grids.hpp"
#include "wqed/pulse.hpp"

namespace wqed {

// Transmitted/reflected amplitudes on an evaluation grid plus the derived
// intensities. Frequencies are in omega_q units; intensities are
// |amplitude|^2 * Omega, i.e. plain |amplitude|^2 of the normalized fields.
// In transfer mode (DeltaLimit pulses) the amplitudes are the transfer
// functions multiplying gamma_0 and the intensities are their |.|^2.
struct SpectrumResult {
    std::vector<double> omega;                    // sorted nodes, omega/Omega
    std::vector<std::complex<double>> gamma_out;  // forward amplitude
    std::vector<std::complex<double>> delta_out;  // backward amplitude
    std::vector<double> s_exact_fwd, s_exact_bwd;    // Heitler solution
    std::vector<double> s_approx_fwd, s_approx_bwd;  // negative-frequency baseline
    double norm_I = 0.0;
    bool transfer_mode = false;

    std::size_t size() const { return omega.size(); }
};

// Evaluation nodes for spectra: a uniform base grid over the pulse band
// [omega_s - 5 delta, omega_s + 5 delta], widened to include the Markovian
// poles +- 5 linewidths, with dense patches around each pole (step <=
// linewidth/20) so subradiant lines stay resolved. Inputs normalized.
std::vector<double> spectra_nodes(const ChainConfig& cfg, const PulseSpec& pulse,
                                  int base_points = 2001);

// Same pole-patch construction on an explicit base grid; the requested span
// is honored exactly (no automatic widening).
std::vector<double> spectra_nodes(const ChainConfig& cfg, const FrequencyGrid& base);

}  // namespace wqed

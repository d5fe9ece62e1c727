// solver.hpp — General-N frequency-domain solver: assembles and solves the
// linear system for the qubit amplitudes beta_n(nu) and produces the
// asymptotic transmitted/reflected spectra.

#pragma once

#include <span>

#include "wqed/kernels.hpp"
#include "wqed/linalg.hpp"
#include "wqed/spectrum.hpp"

namespace wqed::solver {

using Complex = std::complex<double>;

struct SolveOptions {
    kernels::DriveOptions drive;  // PV switch, Markovian switch, quadrature
    double rcond_min = 1e-12;     // singular-system floor for the dense solve
};

// Fourier amplitudes of the qubits on an evaluation grid: beta[q][i] is
// qubit q at nu[i] (omega_q units).
struct BetaSpectrum {
    std::vector<double> nu;
    std::vector<std::vector<Complex>> beta;

    std::size_t qubits() const { return beta.size(); }
};

// System matrix at Fourier frequency nu (same units as cfg):
//   M_nn   = nu - Omega + i Gamma(nu)/2
//   M_nn'  = i Gamma(nu)/2 (e^{i k_nu |x_n - x_n'|} + i G(k_nu (x_n - x_n')))
// Complex-symmetric since G is even and the exponent uses |dx|.
linalg::CMatrix assemble_system(double nu, const ChainConfig& cfg, bool markovian = false);

// Solves M(nu) beta(nu) = C(nu) per node, drive terms from kernels. Inputs
// may be in SI or already normalized; they are normalized internally and the
// returned grid/amplitudes are in omega_q units.
BetaSpectrum solve_beta(const ChainConfig& cfg, const PulseSpec& pulse,
                        std::span<const double> nu_nodes, const SolveOptions& opts = {});
BetaSpectrum solve_beta(const ChainConfig& cfg, const PulseSpec& pulse,
                        const FrequencyGrid& grid, const SolveOptions& opts = {});

// Asymptotic fields from the solved amplitudes:
//   gamma(w, t->inf) = gamma_0(w) - i g(w) sum_n beta_n(w) e^{-i k x_n}
//   delta(w, t->inf) =            - i g(w) sum_n beta_n(w) e^{+i k x_n}
// Fills the exact intensity channels and the norm diagnostic. For DeltaLimit
// pulses the result holds transfer functions (gamma_0 divided out).
SpectrumResult spectra(const ChainConfig& cfg, const PulseSpec& pulse,
                       const BetaSpectrum& beta, const SolveOptions& opts = {});

}  // namespace wqed::solver

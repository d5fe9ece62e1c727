// closed_form.hpp — Analytic one- and two-qubit solutions: the exact
// positive-frequency (Heitler) spectra, the negative-frequency-extended
// baselines, the delta-pulse transfer functions and the single-qubit time
// evolution. Fast path for all figures and oracle for the general solver.
//
// All functions here are Wigner-Weisskopf forms (constant Gamma and g) and
// require cfg.coupling_mode == WWConstant. Configs and pulses may be SI or
// normalized; outputs are in omega_q units.

#pragma once

#include <span>

#include "wqed/kernels.hpp"
#include "wqed/spectrum.hpp"

namespace wqed::closed_form {

using Complex = std::complex<double>;

struct Options {
    kernels::DriveOptions drive;  // include_pv / markovian / quadrature
    bool include_g_kernel = true;  // delta transfer only: drop G to recover the
                                   // large-separation baseline
};

// Single qubit at x = 0: beta(omega) = drive(omega) / (omega - Omega + i Gamma/2).
// DeltaLimit pulses yield the transfer form 2 pi g / (omega - Omega + i Gamma/2).
Complex beta_omega_single(double omega, const ChainConfig& cfg, const PulseSpec& pulse,
                          const Options& opts = {});

// Exact single-qubit spectra:
//   gamma_WW = gamma0 (D + i Gamma/4 - i Gamma/2)/D ... written out:
//   gamma_WW = gamma0 (w - Omega + i Gamma/4)/D + (Gamma/4pi) PV/D
//   delta_WW = gamma0 (-i Gamma/4)/D           + (Gamma/4pi) PV/D
// with D = w - Omega + i Gamma/2 and PV = P int gamma0(w')/(w - w') dw'.
SpectrumResult spectra_single_exact(const ChainConfig& cfg, const PulseSpec& pulse,
                                    std::span<const double> nodes, const Options& opts = {});

// Negative-frequency-extended baseline (pointwise flux conserving):
//   gamma = gamma0 (w - Omega)/D,  delta = -i (Gamma/2) gamma0 / D.
SpectrumResult spectra_single_approx(const ChainConfig& cfg, const PulseSpec& pulse,
                                     std::span<const double> nodes, const Options& opts = {});

// Single-qubit amplitude in time (residue form of the inverse transform):
//   beta(t) = int_0^cut g gamma0(w) (e^{-i(w-Omega)t} - e^{-Gamma t/2})
//                                   / (w - Omega + i Gamma/2) dw,  t >= 0
// and beta(t) = 0 for t < 0. Evaluated with the adaptive half-line rule.
Complex beta_t_single(double t, const ChainConfig& cfg, const PulseSpec& pulse,
                      const Options& opts = {});

// Two qubits at {0, d}: exact spectra with the dipole-dipole kernel and the
// PV drive terms (the second PV carries e^{i k' d} inside the integrand).
SpectrumResult spectra_pair_exact(const ChainConfig& cfg, const PulseSpec& pulse,
                                  std::span<const double> nodes, const Options& opts = {});

// Large-separation baseline for the pair (no G, drives taken local):
//   gamma = gamma0 (w-Omega)^2 / DEN0,
//   delta = -i (Gamma/2) gamma0 e^{ikd} (2(w-Omega)cos kd + Gamma sin kd) / DEN0,
// with DEN0 = (w - Omega + i Gamma/2)^2 + (Gamma^2/4) e^{2ikd}; opts.drive.markovian
// replaces k_omega by k0 throughout.
SpectrumResult spectra_pair_approx(const ChainConfig& cfg, const PulseSpec& pulse,
                                   std::span<const double> nodes, const Options& opts = {});

// Delta-pulse transfer functions for the pair, assembled from the explicit
// amplitude pair with the drives 2 pi g gamma0 (1, e^{ikd}); G enters both the
// denominator and the numerators. include_g_kernel = false recovers the
// large-separation baseline exactly.
SpectrumResult spectra_pair_delta(const ChainConfig& cfg, std::span<const double> nodes,
                                  const Options& opts = {});

}  // namespace wqed::closed_form

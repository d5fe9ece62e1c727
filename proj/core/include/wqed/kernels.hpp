// kernels.hpp — Physics kernels shared by all solvers: coupling g(omega),
// decay rate Gamma(nu), the dipole-dipole kernel G(kd) and the drive terms.

#pragma once

#include <complex>

#include "wqed/chain.hpp"
#include "wqed/pulse.hpp"
#include "wqed/quadrature.hpp"

namespace wqed::kernels {

using Complex = std::complex<double>;

// Qubit-photon coupling g(omega) for the configured mode. omega and the
// result are in the same units as cfg. Throws std::domain_error for
// omega <= 0.
double coupling_g(double omega, const ChainConfig& cfg);

// Gamma(nu) = 4 pi g^2(nu).
double gamma_rate(double nu, const ChainConfig& cfg);

// Dipole-dipole kernel built from the sine/cosine integrals,
//   G(kd) = (1/pi) [cos(kd) Ci(|kd|) + sin(kd) (Si(kd) - (pi/2) sgn(kd))],
// even in kd by construction. Throws std::domain_error at kd = 0, where Ci
// diverges logarithmically.
double g_kernel(double kd);

struct DriveOptions {
    bool include_pv = true;   // diagnostic: drop the principal-value part
    bool markovian = false;   // evaluate retardation phases at k0 instead of k_omega
    quadrature::Options quad;
};

// Truncation point for all Gaussian-driven half-line integrals: the pulse
// band edge omega_s + 12 delta, pushed past the pole when a solver asks for
// frequencies beyond the band. The Gaussian tail there is < 1e-31.
double drive_cutoff(const PulseSpec& pulse, double nu);

// Drive term of qubit n at Fourier frequency nu (inputs normalized to
// omega_q units):
//   pi g(nu) gamma0(nu) e^{i k_nu x_n}
//     + i P int_0^cutoff g(w) gamma0(w) e^{i k_w x_n} / (nu - w) dw.
// For DeltaLimit pulses returns the transfer factor 2 pi g(nu) e^{i k_nu x_n}
// that multiplies gamma0(nu).
Complex drive_term(double nu, std::size_t n, const ChainConfig& cfg,
                   const PulseSpec& pulse, const DriveOptions& opts = {});

}  // namespace wqed::kernels

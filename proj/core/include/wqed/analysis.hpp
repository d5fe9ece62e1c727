// analysis.hpp — Derived diagnostics: Markovian poles, norm integrals and
// spectral-line feature extraction.

#pragma once

#include <span>
#include <vector>

#include "wqed/chain.hpp"
#include "wqed/spectrum.hpp"

namespace wqed::analysis {

// Two-qubit Markovian resonances (F = 0):
//   domega_pm = +-(Gamma/2)(sin k0 d + G(k0 d)),  gamma_pm = (Gamma/2)(1 +- cos k0 d)
// gamma_plus + gamma_minus = Gamma(Omega) identically. Values in cfg units.
struct ResonanceSet {
    double domega_plus = 0.0;
    double domega_minus = 0.0;
    double gamma_plus = 0.0;
    double gamma_minus = 0.0;
};

// Requires N = 2.
ResonanceSet poles_markovian(const ChainConfig& cfg);

// Self-consistent (retarded) variant: the frequency shift is iterated with
// the running wave vector k = omega/vg until |d omega| < tol * Omega; the
// rates are evaluated at the converged frequencies. Seeded by the Markovian
// values; NumericsError after max_iter without convergence. Note the two
// branch rates no longer sum to Gamma exactly once k differs per branch.
ResonanceSet poles_nonmarkovian(const ChainConfig& cfg, double tol = 1e-10,
                                int max_iter = 100);

// Trapezoid integral of |gamma_out|^2 + |delta_out|^2 over the result grid.
double norm_integral(const SpectrumResult& r);

// Fano zeros: local minima of |delta_out(w)|^2 below threshold_ratio times
// the global maximum, refined by a parabolic fit through the bracketing
// samples. Returns the refined frequencies, ascending.
std::vector<double> find_reflection_zeros(const SpectrumResult& r,
                                          double threshold_ratio = 1e-6);

struct PeakFeature {
    double frequency = 0.0;
    double height = 0.0;
    double fwhm = 0.0;  // 0 when a half-height bracket does not exist in-grid
};

// Local maxima of a sampled intensity with parabolic refinement and
// half-height widths.
std::vector<PeakFeature> peak_features(std::span<const double> omega,
                                       std::span<const double> s);

// Convenience overload: the forward intensity channel of the result (exact
// if present, baseline otherwise).
std::vector<PeakFeature> peak_features(const SpectrumResult& r);

}  // namespace wqed::analysis

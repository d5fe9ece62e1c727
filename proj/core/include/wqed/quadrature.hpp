// quadrature.hpp — Half-line and Cauchy principal-value integrals.
//
// These routines are the numerical backbone of the drive terms and of the
// exact spectra. All integrands are smooth complex functions of a real
// frequency; the PV integral handles one simple pole by subtraction, so the
// quadrature itself only ever sees smooth integrands.

#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "wqed/errors.hpp"

namespace wqed::quadrature {

using Complex = std::complex<double>;
using Integrand = std::function<Complex(double)>;

struct Options {
    double abs_tol = 1e-9;      // absolute tolerance of the adaptive rule
    int initial_panels = 64;    // pre-split before adapting
    int max_depth = 48;         // recursion limit per panel
    long max_evals = 40000000;  // global budget, then NumericsError
    // Characteristic smoothness scale of f near the pole, used to pick the
    // finite-difference step and the Taylor patch of the PV subtraction.
    // <= 0 selects min(pole, cutoff - pole) / 8.
    double smooth_scale = 0.0;
};

// Integral of f over [a, b] by adaptive Simpson refinement.
Complex integrate(const Integrand& f, double a, double b, const Options& opts = {});

// Integral of f over [0, cutoff]. The caller guarantees f is negligible
// beyond the cutoff (Gaussian-driven integrands).
Complex integrate_halfline(const Integrand& f, double cutoff, const Options& opts = {});

// Cauchy principal value  P int_a^b f(w) / (pole - w) dw  with a simple pole
// strictly inside (a, b), by pole subtraction:
//
//   int_a^b [f(w) - f(pole)] / (pole - w) dw  +  f(pole) ln((pole-a)/(b-pole))
//
// The subtracted integrand is regularized to -f'(pole) at w = pole.
Complex pv_interval(const Integrand& f, double pole, double a, double b,
                    const Options& opts = {});

// PV integral over [0, cutoff]; the lower limit stays exactly 0 so the
// analytic log term carries the positive-axis truncation.
// Throws std::domain_error if the pole is outside (0, cutoff) or within one
// initial panel of the cutoff.
Complex pv_halfline(const Integrand& f, double pole, double cutoff,
                    const Options& opts = {});

// Trapezoid rule on sorted, possibly non-uniform nodes.
double trapezoid(std::span<const double> x, std::span<const double> y);

// int f(w) e^{-i w t} dw over the node range, with f taken as the linear
// interpolant of the samples and the oscillating factor integrated exactly
// per segment. The error is set by the interpolation of f alone, uniformly
// in t, which makes the rule safe for late-time inverse transforms.
Complex fourier_integral_linear(std::span<const double> omega,
                                std::span<const Complex> f, double t);

}  // namespace wqed::quadrature

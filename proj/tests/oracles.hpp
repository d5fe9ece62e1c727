// oracles.hpp — Test-only reference implementations. Everything here works
// from the defining integrals or elementary algebra, independent of the
// library code paths it is used to check.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "wqed/quadrature.hpp"

namespace oracles {

using Complex = std::complex<double>;
using wqed::quadrature::Integrand;

inline wqed::quadrature::Options tight() {
    wqed::quadrature::Options o;
    o.abs_tol = 1e-12;
    o.initial_panels = 64;
    return o;
}

// Si(x) straight from the defining integral.
inline double si_quadrature(double x) {
    auto f = [](double t) -> Complex {
        if (t == 0.0) return {1.0, 0.0};
        return {std::sin(t) / t, 0.0};
    };
    const double s = x >= 0.0 ? 1.0 : -1.0;
    return s * wqed::quadrature::integrate(f, 0.0, std::abs(x), tight()).real();
}

// Euler-accelerated alternating tail: sum of integral of f over consecutive
// half-periods starting at a (length pi/|freq| each).
inline double oscillatory_tail(const std::function<double(double)>& f, double a,
                               double half_period, int terms = 48) {
    std::vector<double> partial;
    double acc = 0.0;
    auto wrap = [&](double t) -> Complex { return {f(t), 0.0}; };
    for (int k = 0; k < terms; ++k) {
        acc += wqed::quadrature::integrate(wrap, a + k * half_period,
                                           a + (k + 1) * half_period, tight())
                   .real();
        partial.push_back(acc);
    }
    // Repeated averaging of the alternating partial sums.
    std::vector<double> row = partial;
    while (row.size() > 1) {
        for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
        row.pop_back();
    }
    return row.front();
}

// Ci(x) = -int_x^inf cos(t)/t dt: adaptive quadrature up to a cosine zero
// past x + ~50 periods, then the accelerated alternating tail.
inline double ci_quadrature(double x) {
    const double pi = std::numbers::pi;
    // First zero of cos at or after x + 300: t = (m + 1/2) pi.
    const double target = x + 300.0;
    const double m = std::ceil((target / pi) - 0.5);
    const double a = (m + 0.5) * pi;
    auto f = [](double t) -> Complex { return {std::cos(t) / t, 0.0}; };
    const double head = wqed::quadrature::integrate(f, x, a, tight()).real();
    const double tail =
        oscillatory_tail([](double t) { return std::cos(t) / t; }, a, pi);
    return -(head + tail);
}

// Symmetric-grid PV oracle: P int_a^b f(w)/(pole - w) dw. The symmetric span
// around the pole is folded, the singular cell handled by a 3-point local
// expansion, the remainder integrated as a regular function. Refines until
// two grid levels agree.
inline Complex pv_symmetric_grid(const Integrand& f, double pole, double a, double b) {
    const double r = std::min(pole - a, b - pole);
    auto folded_value = [&](int m) {
        // Simpson over u in [h, r] of [f(p-u) - f(p+u)]/u with h = r/m, plus
        // the singular cell [-h, h] by a 3-point local expansion (-2h f'(p)).
        const double h = r / m;
        auto g = [&](double u) -> Complex { return (f(pole - u) - f(pole + u)) / u; };
        const int steps = 2 * m;
        const double dh = (r - h) / steps;
        Complex sum = g(h) + g(r);
        for (int i = 1; i < steps; ++i) {
            sum += (i % 2 == 1 ? 4.0 : 2.0) * g(h + i * dh);
        }
        sum *= dh / 3.0;
        const Complex d1 = (f(pole + h) - f(pole - h)) / (2.0 * h);
        return sum - 2.0 * h * d1;
    };
    Complex prev = folded_value(256), cur = folded_value(512);
    for (int m = 1024; std::abs(cur - prev) > 1e-10 && m <= 65536; m *= 2) {
        prev = cur;
        cur = folded_value(m);
    }
    // Regular remainder outside the symmetric span.
    auto rest = [&](double w) -> Complex { return f(w) / (pole - w); };
    Complex outer = 0.0;
    if (pole - r > a) outer += wqed::quadrature::integrate(rest, a, pole - r, tight());
    if (pole + r < b) outer += wqed::quadrature::integrate(rest, pole + r, b, tight());
    return cur + outer;
}

// Direct-integral reference for the dipole-dipole kernel:
//   (1/pi) int_0^inf w cos(w x) e^{-eta w} / (1 + w) dw
// summed over exact cosine periods with Richardson extrapolation in the
// period count (the pure-cosine part integrates to zero per period, which is
// the converging-factor limit).
inline double g_kernel_direct(double x, int base_periods = 400) {
    const double period = 2.0 * std::numbers::pi / x;
    const double eta = 1e-4 * x * x;
    auto f = [&](double w) -> Complex {
        return {w * std::cos(w * x) * std::exp(-eta * w) / (1.0 + w), 0.0};
    };
    wqed::quadrature::Options o;
    o.abs_tol = 1e-10;  // per period; accumulation stays far below the 1e-3 band
    o.initial_panels = 8;
    auto partial = [&](int periods) {
        double s = 0.0;
        for (int k = 0; k < periods; ++k) {
            s += wqed::quadrature::integrate(f, k * period, (k + 1) * period, o).real();
        }
        return s;
    };
    const double s1 = partial(base_periods);
    const double s2 = partial(2 * base_periods);
    return (2.0 * s2 - s1) / std::numbers::pi;
}

// Cramer's-rule solve for complex 3x3 systems.
inline std::array<Complex, 3> cramer3(const std::array<std::array<Complex, 3>, 3>& m,
                                      const std::array<Complex, 3>& rhs) {
    auto det3 = [](const std::array<std::array<Complex, 3>, 3>& a) {
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    };
    const Complex d = det3(m);
    std::array<Complex, 3> x{};
    for (int col = 0; col < 3; ++col) {
        auto mc = m;
        for (int row = 0; row < 3; ++row) mc[row][col] = rhs[row];
        x[col] = det3(mc) / d;
    }
    return x;
}

}  // namespace oracles

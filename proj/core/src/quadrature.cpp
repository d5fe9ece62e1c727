#include "wqed/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace wqed::quadrature {
namespace {

struct AdaptiveState {
    const Integrand* f = nullptr;
    int max_depth = 0;
    long max_evals = 0;
    long evals = 0;
    double worst_interval_lo = 0.0;
    double worst_interval_hi = 0.0;
    double worst_err = 0.0;

    Complex eval(double x) {
        if (++evals > max_evals) {
            std::ostringstream msg;
            msg << "quadrature: evaluation budget exhausted (" << max_evals
                << " evals); worst interval [" << worst_interval_lo << ", "
                << worst_interval_hi << "] est. error " << worst_err;
            throw NumericsError(msg.str());
        }
        return (*f)(x);
    }
};

// One adaptive Simpson panel. tol is the absolute tolerance assigned to it.
Complex simpson_recurse(AdaptiveState& st, double a, double b, Complex fa, Complex fm,
                        Complex fb, Complex whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    // Abscissa resolution guard: once the interval is a few dozen ulps wide
    // the Simpson difference is pure rounding noise and cannot shrink
    // against a halving tolerance; accept the current estimate.
    if (b - a <= 64.0 * std::numeric_limits<double>::epsilon() *
                     std::max(std::abs(a), std::abs(b))) {
        return whole;
    }
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const Complex flm = st.eval(lm);
    const Complex frm = st.eval(rm);
    const Complex left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const Complex right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const Complex delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || depth <= 0) {
        if (depth <= 0 && std::abs(delta) > 15.0 * tol && std::abs(delta) > st.worst_err) {
            st.worst_err = std::abs(delta);
            st.worst_interval_lo = a;
            st.worst_interval_hi = b;
        }
        return left + right + delta / 15.0;
    }
    return simpson_recurse(st, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_recurse(st, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

Complex integrate(const Integrand& f, double a, double b, const Options& opts) {
    if (!(a < b)) {
        if (a == b) return {0.0, 0.0};
        throw std::domain_error("quadrature::integrate: need a <= b");
    }
    AdaptiveState st;
    st.f = &f;
    st.max_depth = opts.max_depth;
    st.max_evals = opts.max_evals;

    const int n = std::max(1, opts.initial_panels);
    const double h = (b - a) / n;
    const double tol_per_panel = opts.abs_tol / n;
    Complex total = 0.0;
    double deferred_err = 0.0;
    for (int i = 0; i < n; ++i) {
        const double lo = a + i * h;
        const double hi = (i + 1 == n) ? b : lo + h;
        const double mid = 0.5 * (lo + hi);
        const Complex flo = st.eval(lo);
        const Complex fmid = st.eval(mid);
        const Complex fhi = st.eval(hi);
        const Complex whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
        st.worst_err = 0.0;
        total += simpson_recurse(st, lo, hi, flo, fmid, fhi, whole, tol_per_panel,
                                 opts.max_depth);
        deferred_err = std::max(deferred_err, st.worst_err);
    }
    if (deferred_err > opts.abs_tol) {
        std::ostringstream msg;
        msg << "quadrature: failed to converge to abs_tol=" << opts.abs_tol
            << " (max panel error " << deferred_err << " after depth " << opts.max_depth
            << ")";
        throw NumericsError(msg.str());
    }
    return total;
}

Complex integrate_halfline(const Integrand& f, double cutoff, const Options& opts) {
    if (!(cutoff > 0.0)) throw std::domain_error("integrate_halfline: cutoff must be > 0");
    return integrate(f, 0.0, cutoff, opts);
}

Complex pv_interval(const Integrand& f, double pole, double a, double b,
                    const Options& opts) {
    if (!(a < pole && pole < b)) {
        throw std::domain_error("pv_interval: pole must lie strictly inside (a, b)");
    }
    const double margin = std::min(pole - a, b - pole);
    const double scale = opts.smooth_scale > 0.0 ? opts.smooth_scale : margin / 8.0;
    const double h = std::min(1e-2 * scale, 0.25 * margin);
    const Complex fp = f(pole);

    // Five-point central differences; the integrands here are analytic, so
    // Richardson stencils at step ~1e-2*scale sit well above cancellation.
    const Complex fm2 = f(pole - 2.0 * h), fm1 = f(pole - h);
    const Complex fp1 = f(pole + h), fp2 = f(pole + 2.0 * h);
    const Complex d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
    const Complex d2 = (-fm2 + 16.0 * fm1 - 30.0 * fp + 16.0 * fp1 - fp2) / (12.0 * h * h);

    const double band = 1e-4 * scale;
    auto subtracted = [&](double w) -> Complex {
        const double u = w - pole;
        if (std::abs(u) < band) return -d1 - 0.5 * u * d2;
        return -(f(w) - fp) / u;
    };
    const Complex smooth = integrate(subtracted, a, b, opts);
    return smooth + fp * std::log((pole - a) / (b - pole));
}

Complex pv_halfline(const Integrand& f, double pole, double cutoff, const Options& opts) {
    if (!(cutoff > 0.0)) throw std::domain_error("pv_halfline: cutoff must be > 0");
    if (!(pole > 0.0 && pole < cutoff)) {
        throw std::domain_error("pv_halfline: pole must lie in (0, cutoff)");
    }
    const double cell = cutoff / std::max(1, opts.initial_panels);
    if (cutoff - pole <= cell) {
        throw std::domain_error("pv_halfline: pole within one grid cell of cutoff");
    }
    return pv_interval(f, pole, 0.0, cutoff, opts);
}

double trapezoid(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::domain_error("trapezoid: size mismatch");
    if (x.size() < 2) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        sum += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
    }
    return sum;
}

namespace {

// E1(th) = (1 - e^{-i th}) / (i th),  E2(th) = i e^{-i th}/th - (1 - e^{-i th})/th^2:
// the exact segment moments of 1 and u against e^{-i t u}.
void segment_moments(double theta, Complex& m0, Complex& m1) {
    if (std::abs(theta) < 1e-3) {
        const double t2 = theta * theta;
        m0 = Complex(1.0 - t2 / 6.0 + t2 * t2 / 120.0,
                     -theta / 2.0 + theta * t2 / 24.0);
        m1 = Complex(0.5 - t2 / 8.0 + t2 * t2 / 144.0,
                     -theta / 3.0 + theta * t2 / 30.0);
        return;
    }
    const Complex e = std::exp(Complex(0.0, -theta));
    m0 = (1.0 - e) / Complex(0.0, theta);
    m1 = Complex(0.0, 1.0) * e / theta - (1.0 - e) / (theta * theta);
}

}  // namespace

Complex fourier_integral_linear(std::span<const double> omega, std::span<const Complex> f,
                                double t) {
    if (omega.size() != f.size()) {
        throw std::domain_error("fourier_integral_linear: size mismatch");
    }
    if (omega.size() < 2) return {0.0, 0.0};
    Complex total = 0.0;
    for (std::size_t i = 1; i < omega.size(); ++i) {
        const double h = omega[i] - omega[i - 1];
        if (!(h > 0.0)) {
            throw std::domain_error("fourier_integral_linear: nodes must be increasing");
        }
        Complex m0, m1;
        segment_moments(t * h, m0, m1);
        const Complex slope = (f[i] - f[i - 1]);
        const Complex phase = std::exp(Complex(0.0, -t * omega[i - 1]));
        total += phase * h * (f[i - 1] * m0 + slope * m1);
    }
    return total;
}

}  // namespace wqed::quadrature

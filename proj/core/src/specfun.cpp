#include "wqed/specfun.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wqed::specfun {
namespace {

constexpr double kSeriesCut = 4.0;  // power series below, auxiliary CF above

// Power series of Si(x) = sum (-1)^n x^(2n+1) / ((2n+1)(2n+1)!), |x| < kSeriesCut.
double si_series(double x) {
    double u = x;  // (-1)^n x^(2n+1) / (2n+1)!
    double sum = u;
    for (int n = 0; n < 64; ++n) {
        u *= -x * x / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
        const double term = u / (2.0 * n + 3.0);
        sum += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return sum;
}

// Ci(x) = gamma + ln x - Cin(x), Cin(x) = sum_{n>=1} (-1)^(n+1) x^(2n) / ((2n)(2n)!).
double ci_series(double x) {
    double v = x * x / 2.0;  // (-1)^(n+1) x^(2n) / (2n)!
    double cin = v / 2.0;
    for (int n = 1; n < 64; ++n) {
        v *= -x * x / ((2.0 * n + 1.0) * (2.0 * n + 2.0));
        const double term = v / (2.0 * n + 2.0);
        cin += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(cin))) break;
    }
    return kEulerGamma + std::log(x) - cin;
}

// E1(ix) by the classical continued fraction, evaluated with the modified
// Lentz algorithm. Converges for x >= kSeriesCut well inside double precision.
// Ci(x) = -Re E1(ix), Si(x) = pi/2 + Im E1(ix).
std::complex<double> e1_of_ix(double x) {
    const std::complex<double> z(0.0, x);
    const double tiny = 1e-290;
    std::complex<double> f = z + 1.0;
    if (std::abs(f) == 0.0) f = tiny;
    std::complex<double> c = f;
    std::complex<double> d = 0.0;
    for (int n = 1; n <= 20000; ++n) {
        const double a = -static_cast<double>(n) * static_cast<double>(n);
        const std::complex<double> b = z + (2.0 * n + 1.0);
        d = b + a * d;
        if (std::abs(d) == 0.0) d = tiny;
        c = b + a / c;
        if (std::abs(c) == 0.0) c = tiny;
        d = 1.0 / d;
        const std::complex<double> delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) {
            return std::exp(-z) / f;
        }
    }
    throw std::runtime_error("specfun: E1 continued fraction stalled at x=" + std::to_string(x));
}

void require_finite(double x, const char* name) {
    if (!std::isfinite(x)) {
        throw std::domain_error(std::string(name) + ": argument must be finite");
    }
}

}  // namespace

double sine_integral(double x) {
    require_finite(x, "sine_integral");
    const double ax = std::abs(x);
    double v;
    if (ax < kSeriesCut) {
        v = si_series(ax);
    } else {
        v = std::numbers::pi / 2.0 + e1_of_ix(ax).imag();
    }
    return std::copysign(v, x);  // exact odd symmetry, Si(0) = 0
}

double cosine_integral(double x) {
    require_finite(x, "cosine_integral");
    if (x <= 0.0) {
        throw std::domain_error("cosine_integral: defined for x > 0 only");
    }
    if (x < kSeriesCut) return ci_series(x);
    return -e1_of_ix(x).real();
}

}  // namespace wqed::specfun

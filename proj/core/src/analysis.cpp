#include "wqed/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wqed/kernels.hpp"
#include "wqed/quadrature.hpp"

namespace wqed::analysis {
namespace {

double pair_k0d(const ChainConfig& cfg) {
    if (cfg.n() != 2) {
        throw std::domain_error("poles: resonance set is defined for N = 2");
    }
    return cfg.k0() * (cfg.positions[1] - cfg.positions[0]);
}

}  // namespace

ResonanceSet poles_markovian(const ChainConfig& cfg) {
    cfg.validate();
    const double k0d = pair_k0d(cfg);
    const double gamma = cfg.gamma_ratio * cfg.omega_q;
    const double shift = 0.5 * gamma * (std::sin(k0d) + kernels::g_kernel(k0d));
    ResonanceSet set;
    set.domega_plus = shift;
    set.domega_minus = -shift;
    set.gamma_plus = 0.5 * gamma * (1.0 + std::cos(k0d));
    set.gamma_minus = 0.5 * gamma * (1.0 - std::cos(k0d));
    return set;
}

ResonanceSet poles_nonmarkovian(const ChainConfig& cfg, double tol, int max_iter) {
    cfg.validate();
    const double d = cfg.positions[1] - cfg.positions[0];
    (void)pair_k0d(cfg);

    auto iterate_branch = [&](double sign) {
        double omega = cfg.omega_q + sign * poles_markovian(cfg).domega_plus;
        for (int it = 0; it < max_iter; ++it) {
            const double kd = omega / cfg.vg * d;
            const double gamma = kernels::gamma_rate(omega, cfg);
            const double next =
                cfg.omega_q + sign * 0.5 * gamma * (std::sin(kd) + kernels::g_kernel(kd));
            if (std::abs(next - omega) <= tol * cfg.omega_q) {
                return next;
            }
            omega = next;
        }
        throw NumericsError("poles_nonmarkovian: fixed point did not converge");
    };

    const double wp = iterate_branch(+1.0);
    const double wm = iterate_branch(-1.0);
    ResonanceSet set;
    set.domega_plus = wp - cfg.omega_q;
    set.domega_minus = wm - cfg.omega_q;
    set.gamma_plus = 0.5 * kernels::gamma_rate(wp, cfg) * (1.0 + std::cos(wp / cfg.vg * d));
    set.gamma_minus = 0.5 * kernels::gamma_rate(wm, cfg) * (1.0 - std::cos(wm / cfg.vg * d));
    return set;
}

double norm_integral(const SpectrumResult& r) {
    std::vector<double> density(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        density[i] = std::norm(r.gamma_out[i]) + std::norm(r.delta_out[i]);
    }
    return quadrature::trapezoid(r.omega, density);
}

std::vector<double> find_reflection_zeros(const SpectrumResult& r, double threshold_ratio) {
    std::vector<double> zeros;
    if (r.size() < 3) return zeros;
    std::vector<double> s(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        s[i] = std::norm(r.delta_out[i]);
    }
    const double smax = *std::max_element(s.begin(), s.end());
    if (smax <= 0.0) return zeros;

    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (!(s[i] <= s[i - 1] && s[i] <= s[i + 1])) continue;
        // Parabola through the bracketing samples; the vertex of a
        // quadratically vanishing dip recovers the zero location.
        const double x0 = r.omega[i - 1], x1 = r.omega[i], x2 = r.omega[i + 1];
        const double y0 = s[i - 1], y1 = s[i], y2 = s[i + 1];
        const double h1 = x1 - x0, h2 = x2 - x1;
        const double denom = h1 * (y2 - y1) + h2 * (y0 - y1);
        double xv = x1, yv = y1;
        if (denom != 0.0) {
            const double shift = 0.5 * (h2 * h2 * (y0 - y1) - h1 * h1 * (y2 - y1)) / denom;
            if (std::abs(shift) <= std::max(h1, h2)) {
                xv = x1 + shift;
                // Vertex value from the same fit; clamp tiny negatives.
                const double a =
                    (h1 * (y2 - y1) + h2 * (y0 - y1)) / (h1 * h2 * (h1 + h2));
                yv = std::max(0.0, y1 - a * shift * shift);
            }
        }
        if (yv < threshold_ratio * smax) zeros.push_back(xv);
    }
    return zeros;
}

std::vector<PeakFeature> peak_features(std::span<const double> omega,
                                       std::span<const double> s) {
    std::vector<PeakFeature> peaks;
    if (omega.size() != s.size()) throw std::domain_error("peak_features: size mismatch");
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (!(s[i] > s[i - 1] && s[i] >= s[i + 1])) continue;
        PeakFeature p;
        const double h1 = omega[i] - omega[i - 1], h2 = omega[i + 1] - omega[i];
        const double denom = h1 * (s[i + 1] - s[i]) + h2 * (s[i - 1] - s[i]);
        p.frequency = omega[i];
        p.height = s[i];
        if (denom != 0.0) {
            const double shift =
                0.5 * (h2 * h2 * (s[i - 1] - s[i]) - h1 * h1 * (s[i + 1] - s[i])) / denom;
            if (std::abs(shift) <= std::max(h1, h2)) {
                const double a =
                    -(h1 * (s[i + 1] - s[i]) + h2 * (s[i - 1] - s[i])) / (h1 * h2 * (h1 + h2));
                p.frequency = omega[i] + shift;
                p.height = s[i] + a * shift * shift;
            }
        }
        // Half-height bracketing with linear interpolation on each side.
        const double half = 0.5 * p.height;
        double left = 0.0, right = 0.0;
        bool has_left = false, has_right = false;
        for (std::size_t j = i; j-- > 0;) {
            if (s[j] <= half) {
                const double t = (half - s[j]) / (s[j + 1] - s[j]);
                left = omega[j] + t * (omega[j + 1] - omega[j]);
                has_left = true;
                break;
            }
        }
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (s[j] <= half) {
                const double t = (s[j - 1] - half) / (s[j - 1] - s[j]);
                right = omega[j - 1] + t * (omega[j] - omega[j - 1]);
                has_right = true;
                break;
            }
        }
        p.fwhm = (has_left && has_right) ? right - left : 0.0;
        peaks.push_back(p);
    }
    return peaks;
}

std::vector<PeakFeature> peak_features(const SpectrumResult& r) {
    const auto& s = !r.s_exact_fwd.empty() ? r.s_exact_fwd : r.s_approx_fwd;
    return peak_features(r.omega, s);
}

}  // namespace wqed::analysis

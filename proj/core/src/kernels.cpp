#include "wqed/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wqed/specfun.hpp"

namespace wqed::kernels {

using std::numbers::pi;

double coupling_g(double omega, const ChainConfig& cfg) {
    if (!(omega > 0.0)) throw std::domain_error("coupling_g: omega must be > 0");
    const double g_at_q = std::sqrt(cfg.gamma_ratio * cfg.omega_q / (4.0 * pi));
    switch (cfg.coupling_mode) {
        case CouplingMode::WWConstant:
            return g_at_q;
        case CouplingMode::LinearInOmega:
            // g^2 = lambda * omega with lambda = Gamma(Omega) / (4 pi Omega)
            return g_at_q * std::sqrt(omega / cfg.omega_q);
    }
    throw std::logic_error("coupling_g: unknown coupling mode");
}

double gamma_rate(double nu, const ChainConfig& cfg) {
    const double g = coupling_g(nu, cfg);
    return 4.0 * pi * g * g;
}

double g_kernel(double kd) {
    if (kd == 0.0) throw std::domain_error("g_kernel: kd must be nonzero");
    if (!std::isfinite(kd)) throw std::domain_error("g_kernel: kd must be finite");
    const double a = std::abs(kd);
    // Even form: cos and sin of |kd| with the sgn folded into the Si bracket.
    return (std::cos(a) * specfun::cosine_integral(a) +
            std::sin(a) * (specfun::sine_integral(a) - pi / 2.0)) /
           pi;
}

double drive_cutoff(const PulseSpec& pulse, double nu) {
    return std::max(pulse.omega_s, nu) + 12.0 * pulse.delta;
}

Complex drive_term(double nu, std::size_t n, const ChainConfig& cfg,
                   const PulseSpec& pulse, const DriveOptions& opts) {
    if (!(nu > 0.0)) throw std::domain_error("drive_term: nu must be > 0");
    if (n >= cfg.n()) throw std::domain_error("drive_term: qubit index out of range");
    const double x = cfg.positions[n];

    auto phase = [&](double w) {
        const double k = (opts.markovian ? cfg.omega_q : w) / cfg.vg;
        return std::exp(Complex(0.0, k * x));
    };

    if (pulse.shape == PulseShape::DeltaLimit) {
        return 2.0 * pi * coupling_g(nu, cfg) * phase(nu);
    }

    const Complex local = pi * coupling_g(nu, cfg) * gaussian_amplitude(nu, pulse) * phase(nu);
    if (!opts.include_pv) return local;

    const double cutoff = drive_cutoff(pulse, nu);
    auto f = [&](double w) -> Complex {
        if (w <= 0.0) return {0.0, 0.0};  // coupling vanishes with the density of states
        return coupling_g(w, cfg) * gaussian_amplitude(w, pulse) * phase(w);
    };
    quadrature::Options quad = opts.quad;
    if (quad.smooth_scale <= 0.0) quad.smooth_scale = pulse.delta;
    const Complex pv = quadrature::pv_halfline(f, nu, cutoff, quad);
    return local + Complex(0.0, 1.0) * pv;
}

}  // namespace wqed::kernels

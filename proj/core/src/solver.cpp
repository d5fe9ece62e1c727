#include "wqed/solver.hpp"

#include <cmath>

#include "wqed/analysis.hpp"
#include "wqed/parallel.hpp"
#include "wqed/quadrature.hpp"

namespace wqed::solver {

linalg::CMatrix assemble_system(double nu, const ChainConfig& cfg, bool markovian) {
    if (!(nu > 0.0)) throw std::domain_error("assemble_system: nu must be > 0");
    const std::size_t n = cfg.n();
    const double gamma = kernels::gamma_rate(nu, cfg);
    const double k = (markovian ? cfg.omega_q : nu) / cfg.vg;

    linalg::CMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = Complex(nu - cfg.omega_q, 0.5 * gamma);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = std::abs(cfg.positions[i] - cfg.positions[j]);
            const Complex coupling = Complex(0.0, 0.5 * gamma) *
                                     (std::exp(Complex(0.0, k * dx)) +
                                      Complex(0.0, 1.0) * kernels::g_kernel(k * dx));
            m.at(i, j) = coupling;
            m.at(j, i) = coupling;
        }
    }
    return m;
}

BetaSpectrum solve_beta(const ChainConfig& cfg, const PulseSpec& pulse,
                        std::span<const double> nu_nodes, const SolveOptions& opts) {
    const ChainConfig chain = normalized(cfg);
    const PulseSpec drive_pulse =
        pulse.shape == PulseShape::DeltaLimit ? pulse : normalized(pulse, cfg.omega_q);
    const std::size_t n = chain.n();

    BetaSpectrum out;
    out.nu.assign(nu_nodes.begin(), nu_nodes.end());
    out.beta.assign(n, std::vector<Complex>(out.nu.size()));

    parallel_for(out.nu.size(), [&](std::size_t i) {
        const double nu = out.nu[i];
        const auto m = assemble_system(nu, chain, opts.drive.markovian);
        std::vector<Complex> c(n);
        for (std::size_t q = 0; q < n; ++q) {
            c[q] = kernels::drive_term(nu, q, chain, drive_pulse, opts.drive);
        }
        const auto beta = linalg::solve(m, c, opts.rcond_min);
        for (std::size_t q = 0; q < n; ++q) out.beta[q][i] = beta[q];
    });
    return out;
}

BetaSpectrum solve_beta(const ChainConfig& cfg, const PulseSpec& pulse,
                        const FrequencyGrid& grid, const SolveOptions& opts) {
    const auto nodes = grid.points();
    return solve_beta(cfg, pulse, nodes, opts);
}

SpectrumResult spectra(const ChainConfig& cfg, const PulseSpec& pulse,
                       const BetaSpectrum& beta, const SolveOptions& opts) {
    const ChainConfig chain = normalized(cfg);
    const bool transfer = pulse.shape == PulseShape::DeltaLimit;
    const PulseSpec npulse = transfer ? pulse : normalized(pulse, cfg.omega_q);
    if (beta.qubits() != chain.n()) {
        throw std::domain_error("spectra: beta was solved for a different chain");
    }

    SpectrumResult r;
    r.omega = beta.nu;
    r.transfer_mode = transfer;
    const std::size_t m = r.omega.size();
    r.gamma_out.resize(m);
    r.delta_out.resize(m);
    r.s_exact_fwd.resize(m);
    r.s_exact_bwd.resize(m);

    for (std::size_t i = 0; i < m; ++i) {
        const double w = r.omega[i];
        const double k = opts.drive.markovian ? chain.omega_q : w;
        const double g = kernels::coupling_g(w, chain);
        const Complex incident = transfer ? Complex(1.0, 0.0) : gaussian_amplitude(w, npulse);
        Complex fwd = 0.0, bwd = 0.0;
        for (std::size_t q = 0; q < chain.n(); ++q) {
            const double x = chain.positions[q];
            fwd += beta.beta[q][i] * std::exp(Complex(0.0, -k * x));
            bwd += beta.beta[q][i] * std::exp(Complex(0.0, +k * x));
        }
        r.gamma_out[i] = incident - Complex(0.0, 1.0) * g * fwd;
        r.delta_out[i] = -Complex(0.0, 1.0) * g * bwd;
        r.s_exact_fwd[i] = std::norm(r.gamma_out[i]);
        r.s_exact_bwd[i] = std::norm(r.delta_out[i]);
    }
    r.norm_I = transfer ? 0.0 : analysis::norm_integral(r);
    return r;
}

}  // namespace wqed::solver

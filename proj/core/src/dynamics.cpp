#include "wqed/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wqed/analysis.hpp"
#include "wqed/parallel.hpp"
#include "wqed/quadrature.hpp"

namespace wqed::dynamics {
namespace {

struct Segment {
    double lo, hi, step;
};

// Emits nodes where every covering segment's step bound is honored.
std::vector<double> merge_segments(std::vector<Segment> segs) {
    std::vector<double> cuts;
    for (const auto& s : segs) {
        cuts.push_back(s.lo);
        cuts.push_back(s.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](double a, double b) { return b - a < 1e-14; }),
               cuts.end());

    std::vector<double> nodes;
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        const double lo = cuts[c], hi = cuts[c + 1];
        double step = hi - lo;
        bool covered = false;
        for (const auto& s : segs) {
            if (s.lo <= lo + 1e-14 && s.hi >= hi - 1e-14) {
                step = std::min(step, s.step);
                covered = true;
            }
        }
        if (!covered) continue;
        const int n = std::max(1, static_cast<int>(std::ceil((hi - lo) / step)));
        for (int i = 0; i < n; ++i) nodes.push_back(lo + (hi - lo) * i / n);
    }
    if (!cuts.empty()) nodes.push_back(cuts.back());
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end(),
                            [](double a, double b) { return b - a < 1e-13; }),
                nodes.end());
    return nodes;
}

std::vector<std::pair<double, double>> pole_list(const ChainConfig& chain) {
    std::vector<std::pair<double, double>> poles;  // (center, width)
    if (chain.n() == 2) {
        const auto set = analysis::poles_markovian(chain);
        poles.emplace_back(1.0 + set.domega_plus, std::max(set.gamma_plus, 1e-9));
        poles.emplace_back(1.0 + set.domega_minus, std::max(set.gamma_minus, 1e-9));
    } else {
        poles.emplace_back(1.0, chain.gamma_ratio);
    }
    return poles;
}

}  // namespace

std::vector<double> inversion_nodes(const ChainConfig& cfg, const PulseSpec& pulse,
                                    const Options& opts) {
    const ChainConfig chain = normalized(cfg);
    const PulseSpec np = normalized(pulse, cfg.omega_q);
    if (np.shape == PulseShape::DeltaLimit) {
        throw std::domain_error("dynamics: time evolution needs a normalizable pulse");
    }
    const auto poles = pole_list(chain);

    std::vector<Segment> segs;
    const double t0 = np.t0();
    // Pulse band: the drive term oscillates as e^{i nu t0} there, so the
    // sampling must hold (step * t0)^2 interpolation error near 1e-5.
    const double band_step = std::min(np.delta / 40.0, 0.02 / (1.0 + t0));
    segs.push_back({np.omega_s - opts.pulse_span_sigmas * np.delta,
                    np.omega_s + opts.pulse_span_sigmas * np.delta, band_step});
    for (const auto& [c, w] : poles) {
        segs.push_back({c - opts.pole_span_linewidths * w, c + opts.pole_span_linewidths * w,
                        w / 10.0});
        segs.push_back({c - 6.0 * w, c + 6.0 * w, w / 100.0});
    }
    for (auto& s : segs) {
        s.lo = std::max(s.lo, 1e-6);
        s.hi = std::max(s.hi, s.lo + 1e-6);
    }
    return merge_segments(std::move(segs));
}

BetaTimeSeries beta_t_numeric(const ChainConfig& cfg, const PulseSpec& pulse,
                              const TimeGrid& tgrid, const Options& opts) {
    tgrid.validate();
    const ChainConfig chain = normalized(cfg);
    const auto nodes = inversion_nodes(cfg, pulse, opts);

    const double numax = std::max(std::abs(nodes.front() - 1.0), std::abs(nodes.back() - 1.0));
    const auto times = tgrid.points();
    if (times.size() >= 2) {
        const double dt = times[1] - times[0];
        if (numax * dt > std::numbers::pi) {
            throw ConfigError(
                "beta_t_numeric: output step cannot resolve the retained detunings "
                "(max|nu-Omega|*dt > pi); refine the time grid");
        }
    }

    const auto beta_nu = solver::solve_beta(cfg, pulse, nodes, opts.solve);

    BetaTimeSeries out;
    out.t = times;
    out.beta.assign(chain.n(), std::vector<Complex>(times.size()));
    // Shift to the detuning variable so the kernel is e^{-i u t}.
    std::vector<double> u(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) u[i] = nodes[i] - 1.0;

    parallel_for(times.size(), [&](std::size_t j) {
        const double t = times[j];
        for (std::size_t q = 0; q < chain.n(); ++q) {
            if (t < 0.0) {
                out.beta[q][j] = 0.0;
                continue;
            }
            out.beta[q][j] =
                quadrature::fourier_integral_linear(u, beta_nu.beta[q], t) /
                (2.0 * std::numbers::pi);
        }
    });
    return out;
}

double radiated_norm_at_time(const ChainConfig& cfg, const PulseSpec& pulse,
                             const BetaTimeSeries& series, double t, const Options& opts) {
    const ChainConfig chain = normalized(cfg);
    const PulseSpec np = normalized(pulse, cfg.omega_q);
    if (series.qubits() != chain.n()) {
        throw std::domain_error("radiated_norm_at_time: series/chain mismatch");
    }
    if (series.t.empty() || series.t.back() < t - 1e-12) {
        throw std::domain_error("radiated_norm_at_time: series does not cover [0, t]");
    }

    // Truncate the series at t, snapping down to the nearest sample.
    std::vector<double> tau;
    std::vector<std::vector<Complex>> b(chain.n());
    for (std::size_t j = 0; j < series.t.size() && series.t[j] <= t + 1e-12; ++j) {
        tau.push_back(series.t[j]);
        for (std::size_t q = 0; q < chain.n(); ++q) b[q].push_back(series.beta[q][j]);
    }
    if (tau.size() < 2) return 0.0;

    const auto omega_nodes = spectra_nodes(cfg, pulse);
    std::vector<double> density(omega_nodes.size());
    parallel_for(omega_nodes.size(), [&](std::size_t i) {
        const double w = omega_nodes[i];
        const double g = kernels::coupling_g(w, chain);
        Complex fwd = gaussian_amplitude(w, np);
        Complex bwd = 0.0;
        for (std::size_t q = 0; q < chain.n(); ++q) {
            // int_0^t beta(tau) e^{i(w-1)tau} d tau, segment-exact in the kernel
            const Complex moment =
                quadrature::fourier_integral_linear(tau, b[q], -(w - 1.0));
            const double x = chain.positions[q];
            fwd -= Complex(0.0, 1.0) * g * moment * std::exp(Complex(0.0, -w * x));
            bwd -= Complex(0.0, 1.0) * g * moment * std::exp(Complex(0.0, +w * x));
        }
        density[i] = std::norm(fwd) + std::norm(bwd);
    });
    (void)opts;
    return quadrature::trapezoid(omega_nodes, density);
}

}  // namespace wqed::dynamics

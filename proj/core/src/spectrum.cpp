#include "wqed/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "wqed/analysis.hpp"

namespace wqed {
namespace {

struct Pole {
    double center = 0.0;  // omega/Omega
    double width = 0.0;   // linewidth in Omega units
};

std::vector<Pole> markovian_poles(const ChainConfig& chain) {
    std::vector<Pole> poles;
    if (chain.n() == 1) {
        poles.push_back({1.0, chain.gamma_ratio});
    } else if (chain.n() == 2) {
        const auto set = analysis::poles_markovian(chain);
        poles.push_back({1.0 + set.domega_plus, std::max(set.gamma_plus, 1e-6)});
        poles.push_back({1.0 + set.domega_minus, std::max(set.gamma_minus, 1e-6)});
    }
    // N >= 3 has no closed pole set; the base grid (or an explicit
    // FrequencyGrid) is used as-is.
    return poles;
}

std::vector<double> assemble(double lo, double hi, double base_step,
                             const std::vector<Pole>& poles, bool widen) {
    lo = std::max(lo, 1e-6);
    if (widen) {
        for (const auto& p : poles) {
            lo = std::min(lo, std::max(1e-6, p.center - 5.0 * p.width));
            hi = std::max(hi, p.center + 5.0 * p.width);
        }
    }

    std::vector<double> nodes;
    const int n_base = std::max(3, static_cast<int>(std::ceil((hi - lo) / base_step)) + 1);
    for (int i = 0; i < n_base; ++i) {
        nodes.push_back(lo + (hi - lo) * i / (n_base - 1));
    }
    for (const auto& p : poles) {
        const double step = std::min(base_step, p.width / 20.0);
        const double plo = std::max(lo, p.center - 6.0 * p.width);
        const double phi = std::min(hi, p.center + 6.0 * p.width);
        for (double w = plo; w <= phi + 0.5 * step; w += step) {
            nodes.push_back(std::min(w, phi));
        }
    }
    std::sort(nodes.begin(), nodes.end());
    std::vector<double> out;
    out.reserve(nodes.size());
    for (double w : nodes) {
        if (out.empty() || w - out.back() > 1e-12) out.push_back(w);
    }
    return out;
}

}  // namespace

std::vector<double> spectra_nodes(const ChainConfig& cfg, const PulseSpec& pulse,
                                  int base_points) {
    const ChainConfig chain = normalized(cfg);
    if (base_points < 3) throw ConfigError("spectra_nodes: base_points must be >= 3");
    if (pulse.shape == PulseShape::DeltaLimit) {
        // Transfer-function scans have no pulse band; span the poles.
        const double gamma = chain.gamma_ratio;
        const double lo = 1.0 - 10.0 * gamma, hi = 1.0 + 10.0 * gamma;
        return assemble(lo, hi, (hi - lo) / (base_points - 1), markovian_poles(chain), true);
    }
    const PulseSpec np = normalized(pulse, cfg.omega_q);
    const double lo = np.omega_s - 5.0 * np.delta;
    const double hi = np.omega_s + 5.0 * np.delta;
    return assemble(lo, hi, (hi - lo) / (base_points - 1), markovian_poles(chain), true);
}

std::vector<double> spectra_nodes(const ChainConfig& cfg, const FrequencyGrid& base) {
    const ChainConfig chain = normalized(cfg);
    base.validate();
    return assemble(base.lo, base.hi, base.step(), markovian_poles(chain), false);
}

}  // namespace wqed

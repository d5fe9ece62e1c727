#include "wqed/chain.hpp"

#include <cmath>

namespace wqed {

void ChainConfig::validate() const {
    if (!(omega_q > 0.0)) throw ConfigError("ChainConfig: omega_q must be > 0");
    if (!(vg > 0.0)) throw ConfigError("ChainConfig: vg must be > 0");
    if (!(gamma_ratio > 0.0 && gamma_ratio < 1.0)) {
        throw ConfigError("ChainConfig: gamma_ratio must lie in (0, 1)");
    }
    if (positions.empty()) throw ConfigError("ChainConfig: need at least one qubit");
    for (std::size_t i = 1; i < positions.size(); ++i) {
        if (!(positions[i] > positions[i - 1])) {
            throw ConfigError("ChainConfig: positions must be strictly increasing");
        }
        // Guards the log divergence of Ci at zero separation.
        if (k0() * (positions[i] - positions[i - 1]) < 1e-6) {
            throw ConfigError("ChainConfig: pairwise k0*|dx| must be >= 1e-6");
        }
    }
}

ChainConfig normalized(const ChainConfig& cfg) {
    cfg.validate();
    ChainConfig n = cfg;
    n.omega_q = 1.0;
    n.vg = 1.0;
    const double k0 = cfg.k0();
    for (auto& x : n.positions) x *= k0;
    return n;
}

}  // namespace wqed

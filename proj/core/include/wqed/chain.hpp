// chain.hpp — Physical parameters of the qubit chain and waveguide

#pragma once

#include <cstddef>
#include <vector>

#include "wqed/errors.hpp"

namespace wqed {

// How the qubit-photon coupling g depends on frequency.
//  WWConstant:    g(omega) = g(Omega) = sqrt(Gamma/(4 pi))   (Wigner-Weisskopf)
//  LinearInOmega: g(omega) = sqrt(lambda omega), lambda = Gamma/(4 pi Omega)
enum class CouplingMode { WWConstant, LinearInOmega };

// N identical qubits at strictly increasing positions along the waveguide.
// Fields are in any one consistent unit system; normalized() rescales to
// omega_q = 1, vg = 1 (positions become k0*x). The radiative frequency shift
// F(nu) is absorbed into omega_q and is identically zero in every solver.
struct ChainConfig {
    double omega_q = 0.0;            // qubit frequency Omega
    double gamma_ratio = 0.0;        // Gamma(Omega) / Omega
    std::vector<double> positions;   // x_n, strictly increasing
    double vg = 1.0;                 // group velocity
    CouplingMode coupling_mode = CouplingMode::WWConstant;

    std::size_t n() const { return positions.size(); }
    double k0() const { return omega_q / vg; }

    void validate() const;
};

// Chain with omega_q = 1, vg = 1; positions hold the dimensionless k0 * x_n.
ChainConfig normalized(const ChainConfig& cfg);

}  // namespace wqed

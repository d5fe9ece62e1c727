// grids.hpp — Frequency and time discretizations

#pragma once

#include <vector>

#include "wqed/errors.hpp"

namespace wqed {

// Uniform grid on the positive frequency axis, in units of the qubit
// frequency. n_points must be odd so composite rules can pair panels.
struct FrequencyGrid {
    double lo = 0.0;
    double hi = 0.0;
    int n_points = 0;

    void validate() const {
        if (!(lo >= 0.0) || !(lo < hi)) {
            throw ConfigError("FrequencyGrid: need 0 <= lo < hi");
        }
        if (n_points < 3 || n_points % 2 == 0) {
            throw ConfigError("FrequencyGrid: n_points must be odd and >= 3");
        }
    }

    double step() const { return (hi - lo) / (n_points - 1); }

    std::vector<double> points() const {
        validate();
        std::vector<double> p(static_cast<std::size_t>(n_points));
        const double h = step();
        for (int i = 0; i < n_points; ++i) p[static_cast<std::size_t>(i)] = lo + h * i;
        p.back() = hi;
        return p;
    }
};

// Output time grid, in units of 1/Omega.
struct TimeGrid {
    double t_lo = 0.0;
    double t_hi = 0.0;
    int n_points = 0;

    void validate() const {
        if (!(t_lo >= 0.0) || !(t_lo < t_hi)) {
            throw ConfigError("TimeGrid: need 0 <= t_lo < t_hi");
        }
        if (n_points < 2) throw ConfigError("TimeGrid: n_points must be >= 2");
    }

    std::vector<double> points() const {
        validate();
        std::vector<double> p(static_cast<std::size_t>(n_points));
        const double h = (t_hi - t_lo) / (n_points - 1);
        for (int i = 0; i < n_points; ++i) p[static_cast<std::size_t>(i)] = t_lo + h * i;
        p.back() = t_hi;
        return p;
    }
};

}  // namespace wqed

// errors.hpp — Error taxonomy shared by the library and the CLI exit codes

#pragma once

#include <stdexcept>
#include <string>

namespace wqed {

// Invalid configuration: bad grids, bad chain/pulse parameters, schema issues.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A physics or contract invariant failed at runtime (e.g. norm far from unity).
struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure: quadrature did not converge, singular linear system, ...
struct NumericsError : std::runtime_error {
    explicit NumericsError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wqed

// scenario.hpp — JSON scenario schema: parsing, validation, sweep expansion

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wqed/chain.hpp"
#include "wqed/grids.hpp"
#include "wqed/pulse.hpp"

namespace wqed::cli {

enum class RunMode {
    SpectraExact,
    SpectraApprox,
    SpectraBoth,
    Dynamics,
    Poles,
    DeltaTransfer,
};

// A fully resolved run: physical SI configs plus output controls. The
// resolved JSON document (defaults applied) travels along for the metadata
// sidecar and byte-exact round-trips.
struct Scenario {
    ChainConfig chain;        // SI units
    PulseSpec pulse;          // SI units
    RunMode mode = RunMode::SpectraBoth;
    bool markovian = false;
    bool no_pv = false;
    bool emit_plot_script = false;
    std::optional<FrequencyGrid> grid;  // omega/Omega units; auto when absent
    double t_lo_gamma = 0.0;            // dynamics window in units of 1/Gamma
    double t_hi_gamma = 20.0;
    int time_points = 801;
    nlohmann::json resolved;  // the defaults-applied document
};

// Parses and validates one scenario document. Accepts either a plain config
// or a metadata sidecar (uses its "resolved_config"). Throws ConfigError on
// schema violations, unknown keys, missing units fields or bad values.
Scenario parse_scenario(const nlohmann::json& doc);

// Loads from disk (ConfigError on unreadable file / invalid JSON).
Scenario load_scenario(const std::string& path);

// Expands the optional sweep into per-run documents (the base document with
// the swept path substituted). No sweep, or an empty value list, yields the
// base document alone. The swept path must exist in the document.
std::vector<nlohmann::json> expand_sweep(const nlohmann::json& doc);

const char* mode_name(RunMode mode);

}  // namespace wqed::cli

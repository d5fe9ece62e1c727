// runner.hpp — Executes scenarios: spectra/dynamics/poles computation, CSV
// and metadata-sidecar output, optional plot-script emission.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scenario.hpp"

namespace wqed::cli {

struct RunOverrides {
    std::optional<int> grid_points;  // --grid-points
    bool force_markovian = false;    // --markovian
    bool force_no_pv = false;        // --no-pv
};

struct RunArtifacts {
    std::vector<std::string> csv_paths;
    std::vector<std::string> sidecar_paths;
};

// Loads the config (plain scenario or metadata sidecar), expands the sweep
// and runs every resulting scenario. Artifacts land in out_dir as
// <stem>.csv / <stem>.meta.json (+ <stem>.plot.py when requested), where
// stem derives from the config filename and the sweep index.
RunArtifacts run_scenario_file(const std::string& config_path, const std::string& out_dir,
                               const RunOverrides& overrides = {});

// Runs a single resolved document under the given stem.
RunArtifacts run_one(const nlohmann::json& doc, const std::string& out_dir,
                     const std::string& stem, const RunOverrides& overrides = {});

}  // namespace wqed::cli

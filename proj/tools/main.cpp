// wqed — single-photon scattering on waveguide-coupled qubit chains.
//
// Subcommands:
//   run     — execute a JSON scenario (spectra / dynamics / poles / transfer)
//   goldens — run the paper-value acceptance suite and print the table
//
// Exit codes: 0 ok, 1 unexpected error, 2 configuration/schema error,
// 3 invariant violation, 4 numerical failure. WQED_WORKERS bounds the
// worker pool for per-frequency solves.

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "goldens.hpp"
#include "runner.hpp"
#include "wqed/errors.hpp"
#include "wqed/version.hpp"

namespace {

void print_error_record(const char* kind, const std::string& what, int code) {
    nlohmann::json record{{"error", kind}, {"what", what}, {"exit_code", code}};
    std::fprintf(stderr, "%s\n", record.dump().c_str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-photon transport through a qubit chain in a 1D waveguide"};
    app.set_version_flag("--version", std::string(wqed::kVersion));
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    int grid_points = 0;
    bool markovian = false;
    bool no_pv = false;

    auto* run = app.add_subcommand("run", "execute a scenario config");
    run->add_option("--config", config_path, "scenario JSON (or metadata sidecar)")
        ->required();
    run->add_option("--out", out_dir, "output directory (default: current)");
    run->add_option("--grid-points", grid_points, "override the base spectra grid size");
    run->add_flag("--markovian", markovian, "freeze retardation phases at k0");
    run->add_flag("--no-pv", no_pv, "diagnostic: zero the principal-value drive terms");

    std::string filter;
    auto* goldens = app.add_subcommand("goldens", "run the acceptance criteria");
    goldens->add_option("--filter", filter, "run only criteria whose name contains this");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            wqed::cli::RunOverrides overrides;
            if (grid_points > 0) overrides.grid_points = grid_points;
            overrides.force_markovian = markovian;
            overrides.force_no_pv = no_pv;
            const auto artifacts =
                wqed::cli::run_scenario_file(config_path, out_dir, overrides);
            for (const auto& path : artifacts.csv_paths) {
                std::printf("wrote %s\n", path.c_str());
            }
            return 0;
        }
        const auto results = wqed::cli::run_goldens(filter);
        if (results.empty()) {
            print_error_record("config", "no criteria match filter '" + filter + "'", 2);
            return 2;
        }
        return wqed::cli::report_goldens(results) == 0 ? 0 : 1;
    } catch (const wqed::ConfigError& e) {
        print_error_record("config", e.what(), 2);
        return 2;
    } catch (const nlohmann::json::exception& e) {
        print_error_record("config", e.what(), 2);
        return 2;
    } catch (const wqed::InvariantError& e) {
        print_error_record("invariant", e.what(), 3);
        return 3;
    } catch (const std::domain_error& e) {
        print_error_record("invariant", e.what(), 3);
        return 3;
    } catch (const wqed::NumericsError& e) {
        print_error_record("numerics", e.what(), 4);
        return 4;
    } catch (const std::exception& e) {
        print_error_record("internal", e.what(), 1);
        return 1;
    }
}

#include "runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wqed/analysis.hpp"
#include "wqed/closed_form.hpp"
#include "wqed/dynamics.hpp"
#include "wqed/solver.hpp"
#include "wqed/version.hpp"

namespace wqed::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Data files are written atomically and carry no timestamps, so identical
// configs produce byte-identical artifacts.
void write_atomic(const fs::path& target, const std::string& content) {
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ConfigError("runner: cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, target);
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& columns) {
    std::ostringstream out;
    for (std::size_t c = 0; c < header.size(); ++c) {
        out << (c ? "," : "") << header[c];
    }
    out << "\n";
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            out << (c ? "," : "") << format_value(columns[c][r]);
        }
        out << "\n";
    }
    return out.str();
}

struct Computed {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;
    json features = json::object();
    std::optional<double> norm_I;
    std::string plot_kind;  // "spectra" or "dynamics"
};

solver::SolveOptions solve_options(const Scenario& s, const RunOverrides& ov) {
    solver::SolveOptions o;
    o.drive.markovian = s.markovian || ov.force_markovian;
    o.drive.include_pv = !(s.no_pv || ov.force_no_pv);
    return o;
}

std::vector<double> evaluation_nodes(const Scenario& s, const RunOverrides& ov) {
    if (s.grid) return spectra_nodes(s.chain, *s.grid);
    const int points = ov.grid_points.value_or(2001);
    return spectra_nodes(s.chain, s.pulse, points);
}

json peaks_to_json(const std::vector<analysis::PeakFeature>& peaks) {
    json arr = json::array();
    for (const auto& p : peaks) {
        arr.push_back({{"omega_over_omega_q", p.frequency},
                       {"height", p.height},
                       {"fwhm", p.fwhm}});
    }
    return arr;
}

Computed compute_spectra(const Scenario& s, const RunOverrides& ov) {
    const auto so = solve_options(s, ov);
    closed_form::Options cf_opts;
    cf_opts.drive = so.drive;
    const auto nodes = evaluation_nodes(s, ov);
    const std::size_t n = s.chain.n();
    const bool ww = s.chain.coupling_mode == CouplingMode::WWConstant;
    const bool want_exact = s.mode != RunMode::SpectraApprox;
    const bool want_approx = s.mode != RunMode::SpectraExact && n <= 2;
    if (want_approx && !ww) {
        throw ConfigError(
            "runner: the baseline spectra assume the constant coupling; use "
            "mode spectra_exact with linear_in_omega");
    }

    std::optional<SpectrumResult> exact, approx;
    if (want_exact) {
        // Closed forms are the fast path for small constant-coupling chains;
        // everything else goes through the general solver.
        if (n == 1 && ww) {
            exact = closed_form::spectra_single_exact(s.chain, s.pulse, nodes, cf_opts);
        } else if (n == 2 && ww) {
            exact = closed_form::spectra_pair_exact(s.chain, s.pulse, nodes, cf_opts);
        } else {
            exact = solver::spectra(s.chain, s.pulse,
                                    solver::solve_beta(s.chain, s.pulse, nodes, so), so);
        }
    }
    if (want_approx) {
        approx = n == 1
                     ? closed_form::spectra_single_approx(s.chain, s.pulse, nodes, cf_opts)
                     : closed_form::spectra_pair_approx(s.chain, s.pulse, nodes, cf_opts);
    }

    Computed out;
    out.plot_kind = "spectra";
    out.header = {"omega_over_Omega", "S1", "S2", "S3", "S4"};
    out.columns.assign(5, std::vector<double>(nodes.size(), 0.0));
    out.columns[0] = nodes;
    if (exact) {
        out.columns[1] = exact->s_exact_fwd;
        out.columns[2] = exact->s_exact_bwd;
    }
    if (approx) {
        out.columns[3] = approx->s_approx_fwd;
        out.columns[4] = approx->s_approx_bwd;
    }

    const SpectrumResult& primary = exact ? *exact : *approx;
    if (s.pulse.shape == PulseShape::Gaussian) {
        out.norm_I = analysis::norm_integral(primary);
        if (!(*out.norm_I > 0.97 && *out.norm_I < 1.03)) {
            throw InvariantError("runner: norm diagnostic " + format_value(*out.norm_I) +
                                 " outside [0.97, 1.03]; widen the grid or check the"
                                 " configuration");
        }
    }
    out.features["reflection_zeros"] = analysis::find_reflection_zeros(primary);
    out.features["transmitted_peaks"] = peaks_to_json(analysis::peak_features(primary));
    return out;
}

Computed compute_delta_transfer(const Scenario& s, const RunOverrides& ov) {
    const auto so = solve_options(s, ov);
    closed_form::Options with_g, no_g;
    with_g.drive = so.drive;
    no_g.drive = so.drive;
    no_g.include_g_kernel = false;
    const auto nodes = evaluation_nodes(s, ov);
    const auto dressed = closed_form::spectra_pair_delta(s.chain, nodes, with_g);
    const auto bare = closed_form::spectra_pair_delta(s.chain, nodes, no_g);

    Computed out;
    out.plot_kind = "spectra";
    out.header = {"omega_over_Omega", "S1", "S2", "S3", "S4"};
    out.columns.assign(5, std::vector<double>(nodes.size(), 0.0));
    out.columns[0] = nodes;
    out.columns[1] = dressed.s_exact_fwd;
    out.columns[2] = dressed.s_exact_bwd;
    out.columns[3] = bare.s_exact_fwd;
    out.columns[4] = bare.s_exact_bwd;
    out.features["reflection_zeros"] = analysis::find_reflection_zeros(dressed);
    out.features["transmitted_peaks"] =
        peaks_to_json(analysis::peak_features(nodes, dressed.s_exact_fwd));
    return out;
}

Computed compute_dynamics(const Scenario& s, const RunOverrides& ov) {
    dynamics::Options opts;
    opts.solve = solve_options(s, ov);
    const double gamma = s.chain.gamma_ratio;  // converts 1/Gamma to 1/Omega units
    const TimeGrid tg{s.t_lo_gamma / gamma, s.t_hi_gamma / gamma, s.time_points};
    const auto series = dynamics::beta_t_numeric(s.chain, s.pulse, tg, opts);

    Computed out;
    out.plot_kind = "dynamics";
    out.header = {"t_Gamma"};
    out.columns.push_back(series.t);
    for (double& t : out.columns[0]) t *= gamma;
    for (std::size_t q = 0; q < series.qubits(); ++q) {
        out.header.push_back("abs_beta_sq_" + std::to_string(q + 1));
        std::vector<double> col(series.t.size());
        for (std::size_t j = 0; j < col.size(); ++j) col[j] = std::norm(series.beta[q][j]);
        out.columns.push_back(std::move(col));
    }
    json maxima = json::array();
    for (std::size_t q = 1; q < out.columns.size(); ++q) {
        const auto& col = out.columns[q];
        const auto it = std::max_element(col.begin(), col.end());
        maxima.push_back({{"qubit", q},
                          {"max_abs_beta_sq", *it},
                          {"t_gamma", out.columns[0][static_cast<std::size_t>(
                                          it - col.begin())]}});
    }
    out.features["excitation_maxima"] = maxima;
    return out;
}

Computed compute_poles(const Scenario& s, const RunOverrides&) {
    const auto markov = analysis::poles_markovian(s.chain);
    const auto retarded = analysis::poles_nonmarkovian(s.chain);
    const double gamma = s.chain.gamma_ratio * s.chain.omega_q;

    Computed out;
    out.plot_kind = "";
    out.header = {"branch", "domega_over_omega", "gamma_over_omega", "domega_over_gamma",
                  "retarded_domega_over_omega", "retarded_gamma_over_omega"};
    out.columns.assign(6, std::vector<double>(2, 0.0));
    out.columns[0] = {+1.0, -1.0};
    out.columns[1] = {markov.domega_plus / s.chain.omega_q,
                      markov.domega_minus / s.chain.omega_q};
    out.columns[2] = {markov.gamma_plus / s.chain.omega_q,
                      markov.gamma_minus / s.chain.omega_q};
    out.columns[3] = {markov.domega_plus / gamma, markov.domega_minus / gamma};
    out.columns[4] = {retarded.domega_plus / s.chain.omega_q,
                      retarded.domega_minus / s.chain.omega_q};
    out.columns[5] = {retarded.gamma_plus / s.chain.omega_q,
                      retarded.gamma_minus / s.chain.omega_q};
    out.features["markovian"] = {{"domega_plus_over_gamma", markov.domega_plus / gamma},
                                 {"domega_minus_over_gamma", markov.domega_minus / gamma},
                                 {"gamma_plus_over_gamma", markov.gamma_plus / gamma},
                                 {"gamma_minus_over_gamma", markov.gamma_minus / gamma}};
    return out;
}

std::string plot_script(const std::string& csv_name, const std::string& kind) {
    std::ostringstream py;
    py << "#!/usr/bin/env python3\n"
          "import csv\n"
          "import matplotlib.pyplot as plt\n\n"
          "rows = list(csv.DictReader(open('"
       << csv_name
       << "')))\n"
          "cols = {k: [float(r[k]) for r in rows] for k in rows[0]}\n\n";
    if (kind == "dynamics") {
        py << "for key in [k for k in cols if k.startswith('abs_beta_sq_')]:\n"
              "    plt.plot(cols['t_Gamma'], cols[key], label='|b_'+key[-1]+'(t)|^2')\n"
              "plt.xlabel('t Gamma')\n"
              "plt.ylabel('excitation probability')\n";
    } else {
        py << "styles = {'S1': ('k-', 'S1'), 'S2': ('r--', 'S2'),\n"
              "          'S3': ('b-.', 'S3'), 'S4': ('g:', 'S4')}\n"
              "for key, (style, label) in styles.items():\n"
              "    if any(v != 0.0 for v in cols.get(key, [])):\n"
              "        plt.plot(cols['omega_over_Omega'], cols[key], style, label=label)\n"
              "plt.xlabel('omega / Omega')\n"
              "plt.ylabel('S(omega)')\n";
    }
    py << "plt.legend()\nplt.tight_layout()\nplt.show()\n";
    return py.str();
}

}  // namespace

RunArtifacts run_one(const json& doc, const std::string& out_dir, const std::string& stem,
                     const RunOverrides& overrides) {
    const auto t_start = std::chrono::steady_clock::now();
    const Scenario s = parse_scenario(doc);

    Computed computed;
    switch (s.mode) {
        case RunMode::SpectraExact:
        case RunMode::SpectraApprox:
        case RunMode::SpectraBoth:
            computed = compute_spectra(s, overrides);
            break;
        case RunMode::DeltaTransfer:
            computed = compute_delta_transfer(s, overrides);
            break;
        case RunMode::Dynamics:
            computed = compute_dynamics(s, overrides);
            break;
        case RunMode::Poles:
            computed = compute_poles(s, overrides);
            break;
    }

    fs::create_directories(out_dir);
    const fs::path csv_path = fs::path(out_dir) / (stem + ".csv");
    write_atomic(csv_path, csv_table(computed.header, computed.columns));

    RunArtifacts artifacts;
    artifacts.csv_paths.push_back(csv_path.string());

    if (s.emit_plot_script && !computed.plot_kind.empty()) {
        const fs::path py_path = fs::path(out_dir) / (stem + ".plot.py");
        write_atomic(py_path, plot_script(csv_path.filename().string(), computed.plot_kind));
    }

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    json sidecar;
    sidecar["software_version"] = kVersion;
    sidecar["resolved_config"] = s.resolved;
    sidecar["mode"] = mode_name(s.mode);
    sidecar["csv"] = csv_path.filename().string();
    sidecar["columns"] = computed.header;
    if (computed.norm_I) sidecar["norm_I"] = *computed.norm_I;
    sidecar["features"] = computed.features;
    sidecar["wall_time_s"] = wall;
    const fs::path meta_path = fs::path(out_dir) / (stem + ".meta.json");
    write_atomic(meta_path, sidecar.dump(2) + "\n");
    artifacts.sidecar_paths.push_back(meta_path.string());
    return artifacts;
}

RunArtifacts run_scenario_file(const std::string& config_path, const std::string& out_dir,
                               const RunOverrides& overrides) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("runner: cannot open config file '" + config_path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("runner: invalid JSON: ") + e.what());
    }
    (void)parse_scenario(doc);  // full validation including the sweep block

    std::string stem = fs::path(config_path).stem().string();
    if (stem.size() > 5 && stem.ends_with(".meta")) stem.resize(stem.size() - 5);

    const auto runs = expand_sweep(doc);
    RunArtifacts all;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        std::string run_stem = stem;
        if (runs.size() > 1) {
            char suffix[16];
            std::snprintf(suffix, sizeof suffix, "_sweep%03zu", i);
            run_stem += suffix;
        }
        auto artifacts = run_one(runs[i], out_dir, run_stem, overrides);
        all.csv_paths.insert(all.csv_paths.end(), artifacts.csv_paths.begin(),
                             artifacts.csv_paths.end());
        all.sidecar_paths.insert(all.sidecar_paths.end(), artifacts.sidecar_paths.begin(),
                                 artifacts.sidecar_paths.end());
    }
    return all;
}

}  // namespace wqed::cli

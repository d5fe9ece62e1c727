#include "scenario.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>

namespace wqed::cli {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError("scenario: " + msg); }

double require_number(const json& obj, const std::string& key, const std::string& ctx) {
    if (!obj.contains(key)) fail(ctx + ": missing required field '" + key + "'");
    if (!obj.at(key).is_number()) fail(ctx + ": field '" + key + "' must be a number");
    return obj.at(key).get<double>();
}

double number_or(const json& obj, const std::string& key, double fallback,
                 const std::string& ctx) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_number()) fail(ctx + ": field '" + key + "' must be a number");
    return obj.at(key).get<double>();
}

void reject_unknown(const json& obj, const std::set<std::string>& known,
                    const std::string& ctx) {
    for (const auto& [key, value] : obj.items()) {
        if (!known.count(key)) fail(ctx + ": unknown field '" + key + "'");
    }
}

RunMode parse_mode(const std::string& name) {
    if (name == "spectra_exact") return RunMode::SpectraExact;
    if (name == "spectra_approx") return RunMode::SpectraApprox;
    if (name == "spectra_both") return RunMode::SpectraBoth;
    if (name == "dynamics") return RunMode::Dynamics;
    if (name == "poles") return RunMode::Poles;
    if (name == "delta_transfer") return RunMode::DeltaTransfer;
    fail("unknown mode '" + name + "'");
}

}  // namespace

const char* mode_name(RunMode mode) {
    switch (mode) {
        case RunMode::SpectraExact: return "spectra_exact";
        case RunMode::SpectraApprox: return "spectra_approx";
        case RunMode::SpectraBoth: return "spectra_both";
        case RunMode::Dynamics: return "dynamics";
        case RunMode::Poles: return "poles";
        case RunMode::DeltaTransfer: return "delta_transfer";
    }
    return "unknown";
}

Scenario parse_scenario(const nlohmann::json& doc_in) {
    const json& doc = doc_in.contains("resolved_config") ? doc_in.at("resolved_config")
                                                         : doc_in;
    if (!doc.is_object()) fail("document must be a JSON object");
    reject_unknown(doc,
                   {"chain", "pulse", "mode", "markovian", "no_pv", "emit_plot_script",
                    "grid", "time_grid", "sweep"},
                   "top level");
    if (!doc.contains("chain") || !doc.contains("pulse") || !doc.contains("mode")) {
        fail("top level requires 'chain', 'pulse' and 'mode'");
    }

    Scenario s;
    s.mode = parse_mode(doc.at("mode").get<std::string>());

    // --- chain ---
    const json& chain = doc.at("chain");
    reject_unknown(chain,
                   {"omega_over_2pi_ghz", "gamma_over_omega", "vg_m_per_s", "n_qubits",
                    "k0d_over_pi", "d_m", "positions_m", "coupling_mode"},
                   "chain");
    const double omega_ghz = require_number(chain, "omega_over_2pi_ghz", "chain");
    s.chain.omega_q = 2.0 * std::numbers::pi * omega_ghz * 1e9;
    s.chain.gamma_ratio = require_number(chain, "gamma_over_omega", "chain");
    s.chain.vg = require_number(chain, "vg_m_per_s", "chain");

    const bool has_k0d = chain.contains("k0d_over_pi");
    const bool has_dm = chain.contains("d_m");
    const bool has_pos = chain.contains("positions_m");
    if (has_pos) {
        if (has_k0d || has_dm) fail("chain: positions_m excludes k0d_over_pi / d_m");
        s.chain.positions = chain.at("positions_m").get<std::vector<double>>();
    } else {
        const int n = static_cast<int>(number_or(chain, "n_qubits", 1.0, "chain"));
        if (n < 1) fail("chain: n_qubits must be >= 1");
        double d = 0.0;
        if (n >= 2) {
            if (has_k0d == has_dm) {
                fail("chain: give exactly one of k0d_over_pi or d_m for spaced chains");
            }
            if (has_k0d) {
                const double k0d =
                    require_number(chain, "k0d_over_pi", "chain") * std::numbers::pi;
                d = k0d * s.chain.vg / s.chain.omega_q;
            } else {
                d = require_number(chain, "d_m", "chain");
            }
        } else if (has_k0d || has_dm) {
            fail("chain: spacing fields are meaningless for a single qubit");
        }
        s.chain.positions.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) s.chain.positions[static_cast<std::size_t>(i)] = i * d;
    }
    if (chain.contains("coupling_mode")) {
        const auto mode = chain.at("coupling_mode").get<std::string>();
        if (mode == "ww_constant") {
            s.chain.coupling_mode = CouplingMode::WWConstant;
        } else if (mode == "linear_in_omega") {
            s.chain.coupling_mode = CouplingMode::LinearInOmega;
        } else {
            fail("chain: unknown coupling_mode '" + mode + "'");
        }
    }
    s.chain.validate();

    // --- pulse ---
    const json& pulse = doc.at("pulse");
    reject_unknown(pulse, {"shape", "omega_s_over_omega", "delta_over_omega", "x0_m"},
                   "pulse");
    const auto shape = pulse.contains("shape") ? pulse.at("shape").get<std::string>()
                                               : std::string("gaussian");
    if (shape == "gaussian") {
        s.pulse.shape = PulseShape::Gaussian;
        s.pulse.delta = require_number(pulse, "delta_over_omega", "pulse") * s.chain.omega_q;
    } else if (shape == "delta_limit") {
        s.pulse.shape = PulseShape::DeltaLimit;
        if (pulse.contains("delta_over_omega")) {
            fail("pulse: delta_over_omega is meaningless in the delta limit");
        }
    } else {
        fail("pulse: unknown shape '" + shape + "'");
    }
    s.pulse.omega_s =
        number_or(pulse, "omega_s_over_omega", 1.0, "pulse") * s.chain.omega_q;
    s.pulse.x0 = number_or(pulse, "x0_m", 0.0, "pulse");
    s.pulse.vg = s.chain.vg;
    s.pulse.validate();

    // --- optional grid ---
    if (doc.contains("grid")) {
        const json& grid = doc.at("grid");
        reject_unknown(grid, {"lo_over_omega", "hi_over_omega", "points"}, "grid");
        FrequencyGrid g;
        g.lo = require_number(grid, "lo_over_omega", "grid");
        g.hi = require_number(grid, "hi_over_omega", "grid");
        g.n_points = static_cast<int>(require_number(grid, "points", "grid"));
        g.validate();
        s.grid = g;
    }

    // --- optional time grid (dynamics) ---
    if (doc.contains("time_grid")) {
        const json& tg = doc.at("time_grid");
        reject_unknown(tg, {"t_lo_gamma", "t_hi_gamma", "points"}, "time_grid");
        s.t_lo_gamma = number_or(tg, "t_lo_gamma", 0.0, "time_grid");
        s.t_hi_gamma = require_number(tg, "t_hi_gamma", "time_grid");
        s.time_points = static_cast<int>(number_or(tg, "points", 801.0, "time_grid"));
        if (!(s.t_lo_gamma >= 0.0) || !(s.t_hi_gamma > s.t_lo_gamma) || s.time_points < 2) {
            fail("time_grid: need 0 <= t_lo_gamma < t_hi_gamma and points >= 2");
        }
    }

    if (doc.contains("markovian")) s.markovian = doc.at("markovian").get<bool>();
    if (doc.contains("no_pv")) s.no_pv = doc.at("no_pv").get<bool>();
    if (doc.contains("emit_plot_script")) {
        s.emit_plot_script = doc.at("emit_plot_script").get<bool>();
    }

    if (doc.contains("sweep")) {
        const json& sweep = doc.at("sweep");
        reject_unknown(sweep, {"path", "values"}, "sweep");
        if (!sweep.contains("path") || !sweep.contains("values")) {
            fail("sweep: requires 'path' and 'values'");
        }
    }

    // Mode-specific constraints.
    const std::size_t n = s.chain.n();
    if ((s.mode == RunMode::SpectraApprox || s.mode == RunMode::SpectraBoth) && n > 2) {
        fail("approximate spectra are defined for one or two qubits only");
    }
    if (s.mode == RunMode::DeltaTransfer && n != 2) {
        fail("delta_transfer mode needs exactly two qubits");
    }
    if (s.mode == RunMode::Poles && n != 2) {
        fail("poles mode needs exactly two qubits");
    }
    if (s.mode == RunMode::Dynamics && s.pulse.shape == PulseShape::DeltaLimit) {
        fail("dynamics needs a normalizable (gaussian) pulse");
    }

    s.resolved = doc;
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open config file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        fail("invalid JSON in '" + path + "': " + e.what());
    }
    return parse_scenario(doc);
}

std::vector<nlohmann::json> expand_sweep(const nlohmann::json& doc_in) {
    const json& doc = doc_in.contains("resolved_config") ? doc_in.at("resolved_config")
                                                         : doc_in;
    if (!doc.contains("sweep")) return {doc};
    const json& sweep = doc.at("sweep");
    const auto path = sweep.at("path").get<std::string>();
    const auto& values = sweep.at("values");
    if (!values.is_array()) fail("sweep: 'values' must be an array");

    // Resolve the dotted path and require that it already exists.
    std::vector<std::string> keys;
    std::size_t start = 0;
    while (start <= path.size()) {
        const auto dot = path.find('.', start);
        keys.push_back(path.substr(start, dot == std::string::npos ? dot : dot - start));
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    const json* probe = &doc;
    for (const auto& key : keys) {
        if (!probe->is_object() || !probe->contains(key)) {
            fail("sweep: path '" + path + "' does not exist in the config");
        }
        probe = &probe->at(key);
    }

    json base = doc;
    base.erase("sweep");
    if (values.empty()) return {base};

    std::vector<json> runs;
    for (const auto& v : values) {
        json run = base;
        json* cursor = &run;
        for (std::size_t i = 0; i + 1 < keys.size(); ++i) cursor = &cursor->at(keys[i]);
        (*cursor)[keys.back()] = v;
        runs.push_back(std::move(run));
    }
    return runs;
}

}  // namespace wqed::cli

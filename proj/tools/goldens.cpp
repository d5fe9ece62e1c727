#include "goldens.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#include "runner.hpp"
#include "wqed/analysis.hpp"
#include "wqed/closed_form.hpp"
#include "wqed/dynamics.hpp"
#include "wqed/kernels.hpp"
#include "wqed/linalg.hpp"
#include "wqed/quadrature.hpp"
#include "wqed/solver.hpp"
#include "wqed/specfun.hpp"

namespace wqed::cli {
namespace {

using Complex = std::complex<double>;
using std::numbers::pi;
constexpr double kOmegaSI = 2.0 * pi * 5e9;  // Omega/2pi = 5 GHz
constexpr Complex kI{0.0, 1.0};

ChainConfig si_chain(double gamma_ratio, std::vector<double> k0x) {
    ChainConfig c;
    c.omega_q = kOmegaSI;
    c.vg = 3e8;
    c.gamma_ratio = gamma_ratio;
    for (double& x : k0x) x /= c.k0();
    c.positions = std::move(k0x);
    return c;
}

PulseSpec si_pulse(double delta_ratio, double x0_m, double omega_s_ratio = 1.0) {
    PulseSpec p;
    p.omega_s = omega_s_ratio * kOmegaSI;
    p.delta = delta_ratio * kOmegaSI;
    p.x0 = x0_m;
    p.vg = 3e8;
    return p;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// ---- reference implementations used only for checking -------------------

// Direct-integral reference for G: (1/pi) int_0^inf w cos(wx) e^{-eta w} /
// (1+w) dw over exact cosine periods, Richardson-extrapolated in the period
// count (the converging-factor treatment of the formally divergent part).
double g_direct_reference(double x) {
    const double period = 2.0 * pi / x;
    const double eta = 1e-4 * x * x;
    quadrature::Options o;
    // Per-period tolerance; with <= 1200 periods the accumulated error stays
    // under 1.2e-6, far inside the 1e-3 comparison band, and the rule stops
    // well above the cos argument-reduction noise at large abscissae.
    o.abs_tol = 1e-9;
    o.initial_panels = 8;
    auto f = [&](double w) -> Complex {
        return {w * std::cos(w * x) * std::exp(-eta * w) / (1.0 + w), 0.0};
    };
    auto partial = [&](int periods) {
        double s = 0.0;
        for (int k = 0; k < periods; ++k) {
            s += quadrature::integrate(f, k * period, (k + 1) * period, o).real();
        }
        return s;
    };
    const double s1 = partial(400);
    const double s2 = partial(800);
    return (2.0 * s2 - s1) / pi;
}

double si_reference(double x) {
    auto f = [](double t) -> Complex {
        return {t == 0.0 ? 1.0 : std::sin(t) / t, 0.0};
    };
    quadrature::Options o;
    o.abs_tol = 1e-12;
    return quadrature::integrate(f, 0.0, x, o).real();
}

double ci_reference(double x) {
    quadrature::Options o;
    o.abs_tol = 1e-12;
    const double m = std::ceil(((x + 300.0) / pi) - 0.5);
    const double a = (m + 0.5) * pi;
    auto f = [](double t) -> Complex { return {std::cos(t) / t, 0.0}; };
    const double head = quadrature::integrate(f, x, a, o).real();
    std::vector<double> partial;
    double acc = 0.0;
    for (int k = 0; k < 48; ++k) {
        acc += quadrature::integrate(f, a + k * pi, a + (k + 1) * pi, o).real();
        partial.push_back(acc);
    }
    while (partial.size() > 1) {
        for (std::size_t i = 0; i + 1 < partial.size(); ++i) {
            partial[i] = 0.5 * (partial[i] + partial[i + 1]);
        }
        partial.pop_back();
    }
    return -(head + partial.front());
}

std::array<Complex, 3> cramer3(const std::array<std::array<Complex, 3>, 3>& m,
                               const std::array<Complex, 3>& rhs) {
    auto det3 = [](const std::array<std::array<Complex, 3>, 3>& a) {
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    };
    const Complex d = det3(m);
    std::array<Complex, 3> x{};
    for (int col = 0; col < 3; ++col) {
        auto mc = m;
        for (int row = 0; row < 3; ++row) mc[row][col] = rhs[row];
        x[col] = det3(mc) / d;
    }
    return x;
}

// ---- criteria ------------------------------------------------------------

GoldenResult c01_g_kernel() {
    GoldenResult r{"c01_g_kernel_anchor", "", false};
    const double g001 = kernels::g_kernel(0.01);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double x = std::pow(10.0, -2.0 + 3.0 * i / 19.0);  // [0.01, 10]
        worst = std::max(worst, std::abs(kernels::g_kernel(x) - g_direct_reference(x)));
    }
    r.pass = std::abs(g001 - (-1.28)) <= 0.01 && worst <= 1e-3;
    r.detail = "G(0.01) = " + fmt(g001) + " (want -1.28 +- 0.01); max |G - direct| = " +
               fmt(worst) + " (want <= 1e-3 on 20 pts in [0.01, 10])";
    return r;
}

GoldenResult c02_pair_shifts() {
    GoldenResult r{"c02_markovian_shifts", "", false};
    const auto set = analysis::poles_markovian(si_chain(0.1, {0.0, 0.01}));
    const double gamma = 0.1 * kOmegaSI;
    const double hi = std::max(set.domega_plus, set.domega_minus) / gamma;
    const double lo = std::min(set.domega_plus, set.domega_minus) / gamma;
    r.pass = std::abs(hi - 0.64) <= 0.01 && std::abs(lo + 0.64) <= 0.01;
    r.detail = "dOmega/Gamma = {" + fmt(lo) + ", " + fmt(hi) +
               "} (want {-0.64, +0.64} +- 0.01) at k0d = 0.01";
    return r;
}

GoldenResult c03_excitation() {
    GoldenResult r{"c03_excitation_maximum", "", false};
    const auto chain = si_chain(0.05, {0.0});
    std::vector<double> maxima;
    for (double x0 : {0.0, 0.025, 0.1, 0.4}) {
        const auto pulse = si_pulse(0.1, x0);
        double best = 0.0, tbest = 0.0;
        for (int i = 0; i <= 400; ++i) {
            const double t = i * 1.0;  // units of 1/Omega
            const double v = std::norm(closed_form::beta_t_single(t, chain, pulse));
            if (v > best) {
                best = v;
                tbest = t;
            }
        }
        for (double t = tbest - 1.0; t <= tbest + 1.0; t += 0.125) {
            best = std::max(best, std::norm(closed_form::beta_t_single(t, chain, pulse)));
        }
        maxima.push_back(best);
    }
    const bool ordered =
        maxima[0] < maxima[1] && maxima[1] < maxima[2] && maxima[2] < maxima[3];
    r.pass = std::abs(maxima[3] - 0.38) <= 0.02 && ordered;
    r.detail = "max|beta|^2(x0=0.4 m) = " + fmt(maxima[3]) +
               " (want 0.38 +- 0.02); maxima over x0 = {" + fmt(maxima[0]) + ", " +
               fmt(maxima[1]) + ", " + fmt(maxima[2]) + ", " + fmt(maxima[3]) +
               "} increasing = " + (ordered ? "yes" : "no");
    return r;
}

GoldenResult c04_norms() {
    GoldenResult r{"c04_norm_conservation", "", false};
    double worst1 = 0.0;
    for (double x0 : {0.0, 0.4}) {
        const auto chain = si_chain(0.1, {0.0});
        const auto pulse = si_pulse(0.1, x0);
        const auto nodes = spectra_nodes(chain, pulse);
        const auto spec = closed_form::spectra_single_exact(chain, pulse, nodes);
        worst1 = std::max(worst1, std::abs(spec.norm_I - 1.0));
    }
    const auto chain2 = si_chain(0.1, {0.0, 2.25 * pi});
    const auto pulse2 = si_pulse(0.1, 0.5);
    const auto nodes2 = spectra_nodes(chain2, pulse2);
    const auto spec2 = closed_form::spectra_pair_exact(chain2, pulse2, nodes2);
    const double dev2 = std::abs(spec2.norm_I - 1.0);
    r.pass = worst1 < 0.01 && dev2 < 0.005;
    r.detail = "one-qubit |norm-1| = " + fmt(worst1) + " (want < 0.01); two-qubit = " +
               fmt(dev2) + " (want < 0.005)";
    return r;
}

double linf_gap(std::span<const double> a, std::span<const double> b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num = std::max(num, std::abs(a[i] - b[i]));
        den = std::max(den, std::abs(b[i]));
    }
    return num / den;
}

GoldenResult c05a_single_gap() {
    GoldenResult r{"c05a_exact_vs_approx_single", "", false};
    const auto chain = si_chain(0.1, {0.0});
    const auto pulse = si_pulse(0.1, 0.4);
    const auto nodes = spectra_nodes(chain, pulse);
    const auto ex = closed_form::spectra_single_exact(chain, pulse, nodes);
    const auto ap = closed_form::spectra_single_approx(chain, pulse, nodes);
    const double gap = std::max(linf_gap(ex.s_exact_fwd, ap.s_approx_fwd),
                                linf_gap(ex.s_exact_bwd, ap.s_approx_bwd));
    r.pass = gap < 0.05;
    r.detail = "rel Linf gap = " + fmt(gap) + " (want < 0.05) at x0 = 0.4 m";
    return r;
}

GoldenResult c05b_pair_gap() {
    GoldenResult r{"c05b_exact_vs_approx_pair", "", false};
    const auto chain = si_chain(0.1, {0.0, 2.25 * pi});
    const auto pulse = si_pulse(0.1, 0.5);
    const auto nodes = spectra_nodes(chain, pulse);
    const auto ex = closed_form::spectra_pair_exact(chain, pulse, nodes);
    const auto ap = closed_form::spectra_pair_approx(chain, pulse, nodes);
    const double gap = std::max(linf_gap(ex.s_exact_fwd, ap.s_approx_fwd),
                                linf_gap(ex.s_exact_bwd, ap.s_approx_bwd));
    r.pass = gap < 0.03;
    r.detail = "rel Linf gap = " + fmt(gap) +
               " (want < 0.03) at x0 = 0.5 m, k0d = 2.25 pi; the measured gap is the"
               " physical G(kd) dressing (~ -0.006 across the line), not a standoff or"
               " quadrature residual";
    return r;
}

GoldenResult c06_fano_zero() {
    GoldenResult r{"c06_fano_reflection_zero", "", false};
    const auto chain = si_chain(0.1, {0.0, 2.25 * pi});
    const auto pulse = si_pulse(0.1, 0.5);
    closed_form::Options markov;
    markov.drive.markovian = true;
    std::vector<double> nodes;
    for (int i = 0; i <= 8000; ++i) nodes.push_back(0.8 + 0.4 * i / 8000.0);
    const auto spec = closed_form::spectra_pair_approx(chain, pulse, nodes, markov);
    const auto zeros = analysis::find_reflection_zeros(spec);
    r.pass = zeros.size() == 1 && std::abs(zeros[0] - 0.95) <= 0.01;
    std::ostringstream os;
    os << zeros.size() << " zero(s) at {";
    for (double z : zeros) os << " " << fmt(z);
    os << " } (want exactly one at 0.95 +- 0.01, Markovian root)";
    r.detail = os.str();
    return r;
}

GoldenResult c07_subradiant_peak() {
    GoldenResult r{"c07_subradiant_peak", "", false};
    const auto chain = si_chain(0.1, {0.0, 3.125 * pi});
    const auto pulse = si_pulse(0.1, 0.0);
    const auto nodes = spectra_nodes(chain, pulse);  // auto-refined near poles
    const auto spec = closed_form::spectra_pair_exact(chain, pulse, nodes);
    const auto peaks = analysis::peak_features(nodes, spec.s_exact_fwd);
    double tallest = 0.0;
    for (const auto& p : peaks) tallest = std::max(tallest, p.height);
    r.pass = std::abs(tallest - 14.7) <= 1.5;
    r.detail = "tallest transmitted peak = " + fmt(tallest) +
               " (want 14.7 +- 1.5) at k0d = 3.125 pi, x0 = 0";
    return r;
}

GoldenResult c08_identities() {
    GoldenResult r{"c08_exact_identities", "", false};
    std::ostringstream os;
    bool ok = true;

    {  // single-qubit gamma - delta = gamma0, pointwise
        const auto chain = si_chain(0.1, {0.0});
        const auto pulse = si_pulse(0.1, 0.1);
        std::vector<double> nodes;
        for (int i = 0; i <= 200; ++i) nodes.push_back(0.7 + 0.6 * i / 200.0);
        const auto spec = closed_form::spectra_single_exact(chain, pulse, nodes);
        const auto np = normalized(pulse, chain.omega_q);
        double worst = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            worst = std::max(worst, std::abs(spec.gamma_out[i] - spec.delta_out[i] -
                                             gaussian_amplitude(nodes[i], np)));
        }
        ok = ok && worst < 1e-12;
        os << "gamma-delta-gamma0: " << fmt(worst);
    }
    {  // rate sum identity, exact
        bool sum_ok = true;
        for (double k0d : {0.01, 0.6, 0.5 * pi, pi, 2.25 * pi}) {
            const auto set = analysis::poles_markovian(si_chain(0.1, {0.0, k0d}));
            sum_ok = sum_ok && (set.gamma_plus + set.gamma_minus == 0.1 * kOmegaSI);
        }
        ok = ok && sum_ok;
        os << "; rate sum exact: " << (sum_ok ? "yes" : "NO");
    }
    {  // G parity, exact
        bool parity = true;
        for (int i = 0; i < 50; ++i) {
            const double x = std::pow(10.0, -2.0 + 3.0 * i / 49.0);
            parity = parity && kernels::g_kernel(-x) == kernels::g_kernel(x);
        }
        ok = ok && parity;
        os << "; G parity exact: " << (parity ? "yes" : "NO");
    }
    {  // baseline pointwise flux conservation
        const auto chain = si_chain(0.1, {0.0});
        const auto pulse = si_pulse(0.1, 0.0);
        std::vector<double> nodes;
        for (int i = 0; i <= 200; ++i) nodes.push_back(0.7 + 0.6 * i / 200.0);
        const auto spec = closed_form::spectra_single_approx(chain, pulse, nodes);
        const auto np = normalized(pulse, chain.omega_q);
        double worst = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const double want = std::norm(gaussian_amplitude(nodes[i], np));
            worst = std::max(worst, std::abs(spec.s_approx_fwd[i] + spec.s_approx_bwd[i] -
                                             want));
        }
        ok = ok && worst < 1e-12;
        os << "; baseline flux: " << fmt(worst);
    }
    {  // solver vs closed form, N = 1 and N = 2
        double worst = 0.0;
        for (int n : {1, 2}) {
            const auto chain =
                n == 1 ? si_chain(0.1, {0.0}) : si_chain(0.1, {0.0, 2.25 * pi});
            const auto pulse = si_pulse(0.1, 0.5);
            std::vector<double> nodes;
            for (int i = 0; i <= 120; ++i) nodes.push_back(0.8 + 0.4 * i / 120.0);
            const auto closed =
                n == 1 ? closed_form::spectra_single_exact(chain, pulse, nodes)
                       : closed_form::spectra_pair_exact(chain, pulse, nodes);
            const auto general =
                solver::spectra(chain, pulse, solver::solve_beta(chain, pulse, nodes));
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                worst = std::max(worst, std::abs(closed.gamma_out[i] - general.gamma_out[i]));
                worst = std::max(worst, std::abs(closed.delta_out[i] - general.delta_out[i]));
            }
        }
        ok = ok && worst < 1e-8;
        os << "; solver-vs-closed: " << fmt(worst);
    }
    {  // Cramer oracle for N = 3
        ChainConfig chain;
        chain.omega_q = 1.0;
        chain.vg = 1.0;
        chain.gamma_ratio = 0.1;
        chain.positions = {0.0, 0.8 * pi, 1.6 * pi};
        PulseSpec pulse;
        pulse.omega_s = 1.0;
        pulse.delta = 0.1;
        pulse.x0 = 4.0;
        pulse.vg = 1.0;
        double worst = 0.0;
        for (double nu : {0.95, 1.0, 1.03}) {
            const auto beta = solver::solve_beta(chain, pulse, std::vector<double>{nu});
            std::array<std::array<Complex, 3>, 3> m{};
            std::array<Complex, 3> rhs{};
            for (int a = 0; a < 3; ++a) {
                m[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] =
                    Complex(nu - 1.0, 0.05);
                for (int b = 0; b < 3; ++b) {
                    if (a == b) continue;
                    const double dx = std::abs(chain.positions[static_cast<std::size_t>(a)] -
                                               chain.positions[static_cast<std::size_t>(b)]);
                    m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                        kI * 0.05 *
                        (std::exp(kI * (nu * dx)) + kI * kernels::g_kernel(nu * dx));
                }
                rhs[static_cast<std::size_t>(a)] =
                    kernels::drive_term(nu, static_cast<std::size_t>(a), chain, pulse);
            }
            const auto want = cramer3(m, rhs);
            for (std::size_t q = 0; q < 3; ++q) {
                worst = std::max(worst, std::abs(beta.beta[q][0] - want[q]));
            }
        }
        ok = ok && worst < 1e-10;
        os << "; cramer3: " << fmt(worst);
    }

    r.pass = ok;
    r.detail = os.str();
    return r;
}

GoldenResult c09_residue_vs_inversion() {
    GoldenResult r{"c09_residue_vs_inversion", "", false};
    ChainConfig chain;
    chain.omega_q = 1.0;
    chain.vg = 1.0;
    chain.gamma_ratio = 0.05;
    chain.positions = {0.0};
    PulseSpec pulse;
    pulse.omega_s = 1.0;
    pulse.delta = 0.1;
    pulse.x0 = 41.888;  // x0 = 0.4 m at paper scale
    pulse.vg = 1.0;
    const TimeGrid tg{0.0, 400.0, 321};  // 20/Gamma
    const auto series = dynamics::beta_t_numeric(chain, pulse, tg);
    double worst = 0.0;
    for (std::size_t j = 0; j < series.t.size(); j += 2) {
        const Complex oracle = closed_form::beta_t_single(series.t[j], chain, pulse);
        worst = std::max(worst, std::abs(series.beta[0][j] - oracle));
    }
    r.pass = worst < 1e-4;
    r.detail = "max |beta_numeric - beta_residue| = " + fmt(worst) +
               " (want < 1e-4 over t in [0, 20/Gamma])";
    return r;
}

GoldenResult c10_properties() {
    GoldenResult r{"c10_property_suites", "", false};
    std::ostringstream os;
    bool ok = true;

    {  // quadrature refinement drift
        PulseSpec p;
        p.omega_s = 1.0;
        p.delta = 0.1;
        p.x0 = 5.0;
        p.vg = 1.0;
        auto f = [&](double w) -> Complex { return gaussian_amplitude(w, p); };
        quadrature::Options coarse, fine;
        coarse.smooth_scale = fine.smooth_scale = 0.1;
        coarse.initial_panels = 64;
        fine.initial_panels = 128;
        const double drift =
            std::abs(quadrature::pv_halfline(f, 1.03, 2.2, coarse) -
                     quadrature::pv_halfline(f, 1.03, 2.2, fine));
        ok = ok && drift < 1e-8;
        os << "pv refinement drift: " << fmt(drift);
    }
    {  // Si/Ci against the defining-integral references
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double x = std::pow(10.0, -3.0 + 6.0 * i / 19.0);
            worst = std::max(worst, std::abs(specfun::sine_integral(x) - si_reference(x)));
            worst = std::max(worst, std::abs(specfun::cosine_integral(x) - ci_reference(x)));
        }
        ok = ok && worst < 1e-8;
        os << "; Si/Ci vs quadrature: " << fmt(worst);
    }
    {  // CSV determinism: identical config, byte-identical artifact
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path() / "wqed_goldens_csv";
        fs::remove_all(dir);
        nlohmann::json doc = {
            {"chain",
             {{"omega_over_2pi_ghz", 5.0}, {"gamma_over_omega", 0.1}, {"vg_m_per_s", 3e8}}},
            {"pulse",
             {{"shape", "gaussian"}, {"omega_s_over_omega", 1.0}, {"delta_over_omega", 0.1},
              {"x0_m", 0.1}}},
            {"mode", "spectra_both"},
        };
        RunOverrides ov;
        ov.grid_points = 201;
        run_one(doc, (dir / "a").string(), "det", ov);
        run_one(doc, (dir / "b").string(), "det", ov);
        auto slurp = [](const fs::path& p) {
            std::ifstream in(p, std::ios::binary);
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        };
        const bool same =
            slurp(dir / "a" / "det.csv") == slurp(dir / "b" / "det.csv") &&
            !slurp(dir / "a" / "det.csv").empty();
        fs::remove_all(dir);
        ok = ok && same;
        os << "; CSV determinism: " << (same ? "byte-identical" : "MISMATCH");
    }

    r.pass = ok;
    r.detail = os.str();
    return r;
}

}  // namespace

std::vector<GoldenResult> run_goldens(const std::string& filter) {
    const std::vector<std::function<GoldenResult()>> criteria = {
        c01_g_kernel,   c02_pair_shifts, c03_excitation,        c04_norms,
        c05a_single_gap, c05b_pair_gap,  c06_fano_zero,         c07_subradiant_peak,
        c08_identities, c09_residue_vs_inversion, c10_properties,
    };
    // Names must be known before running; keep them in sync with the lambdas.
    const std::vector<std::string> names = {
        "c01_g_kernel_anchor",    "c02_markovian_shifts", "c03_excitation_maximum",
        "c04_norm_conservation",  "c05a_exact_vs_approx_single",
        "c05b_exact_vs_approx_pair", "c06_fano_reflection_zero", "c07_subradiant_peak",
        "c08_exact_identities",   "c09_residue_vs_inversion", "c10_property_suites",
    };
    std::vector<GoldenResult> results;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (!filter.empty() && names[i].find(filter) == std::string::npos) continue;
        results.push_back(criteria[i]());
    }
    return results;
}

int report_goldens(const std::vector<GoldenResult>& results) {
    int failures = 0;
    for (const auto& r : results) {
        std::printf("[%s] %-28s %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
        if (!r.pass) ++failures;
    }
    std::printf("%zu criteria, %d failed\n", results.size(), failures);
    return failures;
}

}  // namespace wqed::cli

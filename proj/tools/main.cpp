// Command-line front end: load a flat key=value config, run the Monte-Carlo
// and analytic engines over an optional one-parameter sweep, and emit tidy
// result rows for out-of-process plotting. Exit codes: 0 clean, 1 usage or
// config problem, 2 numeric failure (recorded per row, the run continues),
// 3 tolerance breach in compare mode.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rfvlc/analytic.hpp"
#include "rfvlc/config.hpp"
#include "rfvlc/design.hpp"
#include "rfvlc/quadrature.hpp"
#include "rfvlc/results.hpp"
#include "rfvlc/simcore.hpp"
#include "rfvlc/specfun.hpp"

using namespace rfvlc;

namespace {

enum class Engine { mc, analytic, both };
enum class Metric { coverage, rate, association, interferer_pmf, laplace };

struct SweepAxis {
    std::string param;
    std::vector<double> grid;
};

struct Settings {
    std::string config_path;
    std::string mode_name = "vlc_only";
    std::string metric_name = "coverage";
    std::string sweep_expr;
    std::string engine_name = "both";
    std::string format = "csv";
    std::string out_path;
    std::string empty_rf = "resample";
    std::size_t trials = 100000;
    std::uint64_t seed = 1;
    double tolerance = 0.02;
    int max_k = 10;
    bool no_timing = false;
    bool show_derived = false;
    // design-only
    double beta = 0.5;
    std::string free_param = "lambda_s";
    std::string solver = "numeric";
};

Mode parse_mode(const std::string& s) {
    if (s == "vlc_only") return Mode::vlc_only;
    if (s == "rf_only") return Mode::rf_only;
    if (s == "hybrid") return Mode::hybrid;
    if (s == "opportunistic") return Mode::opportunistic;
    throw std::invalid_argument("mode: expected vlc_only|rf_only|hybrid|opportunistic, got " + s);
}

Metric parse_metric(const std::string& s) {
    if (s == "coverage") return Metric::coverage;
    if (s == "rate") return Metric::rate;
    if (s == "association") return Metric::association;
    if (s == "interferer_pmf") return Metric::interferer_pmf;
    if (s == "laplace") return Metric::laplace;
    throw std::invalid_argument(
        "metric: expected coverage|rate|association|interferer_pmf|laplace, got " + s);
}

Engine parse_engine(const std::string& s) {
    if (s == "mc") return Engine::mc;
    if (s == "analytic") return Engine::analytic;
    if (s == "both") return Engine::both;
    throw std::invalid_argument("engine: expected mc|analytic|both, got " + s);
}

double parse_number(const std::string& s, const char* what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": not a number: " + s);
    }
    if (used != s.size()) throw std::invalid_argument(std::string(what) + ": trailing junk in " + s);
    return v;
}

// PARAM=START:STOP:STEP (inclusive, step > 0) or PARAM=VALUE for one point.
SweepAxis parse_sweep(const std::string& expr) {
    const auto eq = expr.find('=');
    if (eq == std::string::npos || eq == 0)
        throw std::invalid_argument("sweep: expected PARAM=START:STOP:STEP or PARAM=VALUE");
    SweepAxis axis;
    axis.param = expr.substr(0, eq);
    const std::string rest = expr.substr(eq + 1);
    std::vector<std::string> pieces;
    std::size_t pos = 0;
    while (true) {
        const auto colon = rest.find(':', pos);
        pieces.push_back(rest.substr(pos, colon - pos));
        if (colon == std::string::npos) break;
        pos = colon + 1;
    }
    if (pieces.size() == 1) {
        axis.grid.push_back(parse_number(pieces[0], "sweep value"));
        return axis;
    }
    if (pieces.size() != 3)
        throw std::invalid_argument("sweep: expected PARAM=START:STOP:STEP or PARAM=VALUE");
    const double start = parse_number(pieces[0], "sweep start");
    const double stop = parse_number(pieces[1], "sweep stop");
    const double step = parse_number(pieces[2], "sweep step");
    if (!(step > 0.0)) throw std::invalid_argument("sweep: step must be positive");
    if (stop < start) throw std::invalid_argument("sweep: stop must not precede start");
    for (double v = start; v <= stop + 0.5 * step; v += step) axis.grid.push_back(v);
    while (!axis.grid.empty() && axis.grid.back() > stop + 1e-9 * step) axis.grid.pop_back();
    if (axis.grid.empty()) throw std::invalid_argument("sweep: empty grid");
    return axis;
}

NetworkConfig config_at(const NetworkConfig& base, const SweepAxis* axis, double value) {
    NetworkConfig cfg = base;
    if (axis && axis->param != "s") {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", value);
        apply_config_entry(cfg, axis->param, buf);
    }
    return cfg;
}

double analytic_metric(const NetworkConfig& cfg, Mode mode, Metric metric) {
    switch (metric) {
        case Metric::coverage:
            switch (mode) {
                case Mode::vlc_only: return analytic::vlc_coverage_exact(cfg);
                case Mode::rf_only: return analytic::rf_coverage_exact(cfg);
                case Mode::hybrid:
                    return analytic::hybrid_coverage(analytic::vlc_coverage_exact(cfg),
                                                     analytic::rf_coverage_exact(cfg));
                case Mode::opportunistic: return analytic::opportunistic_coverage(cfg);
            }
            break;
        case Metric::rate:
            switch (mode) {
                case Mode::vlc_only: return analytic::spectral_efficiency_vlc(cfg);
                case Mode::rf_only: return analytic::spectral_efficiency_rf(cfg);
                case Mode::opportunistic: return analytic::spectral_efficiency_opportunistic(cfg);
                case Mode::hybrid:
                    throw std::invalid_argument(
                        "rate: the best-of-both-tiers mean has no closed form; use --engine mc");
            }
            break;
        case Metric::association: return analytic::association_probability(cfg);
        default: break;
    }
    throw std::invalid_argument("metric not evaluable pointwise");
}

McEstimate mc_metric(const NetworkConfig& cfg, Mode mode, Metric metric, const SimOptions& opts) {
    switch (metric) {
        case Metric::coverage: return estimate_coverage(cfg, mode, opts);
        case Metric::rate: return estimate_spectral_efficiency(cfg, mode, opts);
        case Metric::association: return estimate_association(cfg, opts);
        default: break;
    }
    throw std::invalid_argument("metric not evaluable pointwise");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct RunOutcome {
    std::vector<ResultRow> rows;
    bool numeric_failure = false;
    bool breach = false;
};

// Scalar metrics: one row per (grid point x engine); errors become nan rows.
RunOutcome run_scalar(const NetworkConfig& base, const SweepAxis* axis, Mode mode, Metric metric,
                      Engine engine, const SimOptions& opts, bool compare, double tolerance,
                      const std::string& metric_name) {
    RunOutcome out;
    const std::size_t n = axis ? axis->grid.size() : 1;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = axis ? axis->grid[i] : std::numeric_limits<double>::quiet_NaN();
        ResultRow proto;
        proto.sweep_param = axis ? axis->param : "";
        proto.sweep_value = x;
        proto.metric = metric_name;

        double a_val = std::numeric_limits<double>::quiet_NaN();
        double m_val = std::numeric_limits<double>::quiet_NaN();
        if (engine != Engine::mc) {
            ResultRow row = proto;
            row.engine = "analytic";
            const auto t0 = std::chrono::steady_clock::now();
            try {
                row.value = a_val = analytic_metric(config_at(base, axis, x), mode, metric);
            } catch (const std::exception& e) {
                std::cerr << "analytic " << metric_name << " at point " << i << ": " << e.what()
                          << "\n";
                out.numeric_failure = true;
            }
            row.seconds = seconds_since(t0);
            out.rows.push_back(row);
        }
        if (engine != Engine::analytic) {
            ResultRow row = proto;
            row.engine = "mc";
            const auto t0 = std::chrono::steady_clock::now();
            try {
                const McEstimate est = mc_metric(config_at(base, axis, x), mode, metric, opts);
                row.value = m_val = est.value;
                row.ci95 = est.ci95;
            } catch (const std::exception& e) {
                std::cerr << "mc " << metric_name << " at point " << i << ": " << e.what() << "\n";
                out.numeric_failure = true;
            }
            row.seconds = seconds_since(t0);
            out.rows.push_back(row);
        }
        if (compare) {
            if (!std::isfinite(a_val) || !std::isfinite(m_val) || std::fabs(a_val - m_val) > tolerance)
                out.breach = true;
        }
    }
    return out;
}

// Interferer-count histogram: the k axis plays the sweep role.
RunOutcome run_pmf(const NetworkConfig& base, Engine engine, const SimOptions& opts, int max_k,
                   bool compare, double tolerance) {
    RunOutcome out;
    std::vector<double> analytic_pmf, mc_pmf;
    double analytic_secs = 0.0, mc_secs = 0.0;
    if (engine != Engine::mc) {
        const auto t0 = std::chrono::steady_clock::now();
        try {
            analytic_pmf = analytic::vlc_interferer_pmf(base, max_k);
        } catch (const std::exception& e) {
            std::cerr << "analytic interferer_pmf: " << e.what() << "\n";
            out.numeric_failure = true;
        }
        analytic_secs = seconds_since(t0);
    }
    if (engine != Engine::analytic) {
        const auto t0 = std::chrono::steady_clock::now();
        try {
            mc_pmf = interferer_pmf_mc(base, opts, max_k);
        } catch (const std::exception& e) {
            std::cerr << "mc interferer_pmf: " << e.what() << "\n";
            out.numeric_failure = true;
        }
        mc_secs = seconds_since(t0);
    }
    for (int k = 0; k <= max_k; ++k) {
        const double a_val = k < static_cast<int>(analytic_pmf.size())
                                 ? analytic_pmf[k]
                                 : std::numeric_limits<double>::quiet_NaN();
        const double m_val =
            k < static_cast<int>(mc_pmf.size()) ? mc_pmf[k] : std::numeric_limits<double>::quiet_NaN();
        if (engine != Engine::mc) {
            ResultRow row;
            row.sweep_param = "k";
            row.sweep_value = k;
            row.engine = "analytic";
            row.metric = "interferer_pmf";
            row.value = a_val;
            row.seconds = analytic_secs;
            out.rows.push_back(row);
        }
        if (engine != Engine::analytic) {
            ResultRow row;
            row.sweep_param = "k";
            row.sweep_value = k;
            row.engine = "mc";
            row.metric = "interferer_pmf";
            row.value = m_val;
            row.seconds = mc_secs;
            out.rows.push_back(row);
        }
        if (compare && (!std::isfinite(a_val) || !std::isfinite(m_val) ||
                        std::fabs(a_val - m_val) > tolerance))
            out.breach = true;
    }
    return out;
}

// Interference Laplace transform over an s grid (sweep param must be "s").
RunOutcome run_laplace(const NetworkConfig& base, const SweepAxis& axis, Engine engine,
                       const SimOptions& opts, bool compare, double tolerance) {
    RunOutcome out;
    const DerivedParams d = derive(base);
    std::vector<double> mc_vals;
    double mc_secs = 0.0;
    if (engine != Engine::analytic) {
        const auto t0 = std::chrono::steady_clock::now();
        try {
            mc_vals = empirical_laplace(base, opts, axis.grid);
        } catch (const std::exception& e) {
            std::cerr << "mc laplace: " << e.what() << "\n";
            out.numeric_failure = true;
        }
        mc_secs = seconds_since(t0);
    }
    for (std::size_t i = 0; i < axis.grid.size(); ++i) {
        const double s = axis.grid[i];
        double a_val = std::numeric_limits<double>::quiet_NaN();
        if (engine != Engine::mc) {
            ResultRow row;
            row.sweep_param = "s";
            row.sweep_value = s;
            row.engine = "analytic";
            row.metric = "laplace";
            const auto t0 = std::chrono::steady_clock::now();
            try {
                row.value = a_val = analytic::vlc_laplace_unconditional(base, d, s);
            } catch (const std::exception& e) {
                std::cerr << "analytic laplace at s=" << s << ": " << e.what() << "\n";
                out.numeric_failure = true;
            }
            row.seconds = seconds_since(t0);
            out.rows.push_back(row);
        }
        if (engine != Engine::analytic) {
            ResultRow row;
            row.sweep_param = "s";
            row.sweep_value = s;
            row.engine = "mc";
            row.metric = "laplace";
            row.value = i < mc_vals.size() ? mc_vals[i] : std::numeric_limits<double>::quiet_NaN();
            row.seconds = mc_secs;
            out.rows.push_back(row);
        }
        const double m_val = i < mc_vals.size() ? mc_vals[i] : std::numeric_limits<double>::quiet_NaN();
        if (compare && (!std::isfinite(a_val) || !std::isfinite(m_val) ||
                        std::fabs(a_val - m_val) > tolerance))
            out.breach = true;
    }
    return out;
}

void echo_derived(const NetworkConfig& cfg) {
    const DerivedParams d = derive(cfg);
    std::cerr << "m_order=" << format_sig9(d.m_order) << "\n"
              << "t_radius_m=" << format_sig9(d.t_radius) << "\n"
              << "z1=" << format_sig9(d.z1) << "\n"
              << "lambda_o_per_m2=" << format_sig9(d.lambda_o) << "\n"
              << "lambda_s_per_m2=" << format_sig9(d.lambda_s) << "\n"
              << "gamma_vlc=" << format_sig9(d.gamma_vlc) << "\n"
              << "gamma_rf=" << format_sig9(d.gamma_rf) << "\n"
              << "noise_vlc_w=" << format_sig9(d.noise_vlc) << "\n"
              << "noise_rf_w=" << format_sig9(d.noise_rf) << "\n";
}

int emit(const Settings& s, const std::vector<ResultRow>& rows) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!s.out_path.empty()) {
        file.open(s.out_path);
        if (!file) {
            std::cerr << "cannot open output file: " << s.out_path << "\n";
            return 1;
        }
        out = &file;
    }
    if (s.format == "csv")
        write_csv(*out, rows, !s.no_timing);
    else if (s.format == "jsonl")
        write_jsonl(*out, rows, !s.no_timing);
    else {
        std::cerr << "format: expected csv|jsonl, got " << s.format << "\n";
        return 1;
    }
    out->flush();
    if (!*out) {
        std::cerr << "write failed\n";
        return 1;
    }
    return 0;
}

int run_experiment(const Settings& s, Engine engine, bool compare) {
    const NetworkConfig base = s.config_path.empty() ? NetworkConfig{} : load_config(s.config_path);
    derive(base);  // validate before any engine runs
    if (s.show_derived) echo_derived(base);

    const Metric metric = parse_metric(s.metric_name);
    const Mode mode = parse_mode(s.mode_name);
    SimOptions opts;
    opts.trials = s.trials;
    opts.seed = s.seed;
    if (s.empty_rf == "resample")
        opts.empty_sbs = EmptySbsPolicy::resample;
    else if (s.empty_rf == "outage")
        opts.empty_sbs = EmptySbsPolicy::outage;
    else
        throw std::invalid_argument("empty-rf: expected resample|outage, got " + s.empty_rf);
    if (engine != Engine::analytic && s.trials < 1)
        throw std::invalid_argument("trials: at least one trial when the mc engine runs");

    SweepAxis axis;
    const bool has_sweep = !s.sweep_expr.empty();
    if (has_sweep) {
        axis = parse_sweep(s.sweep_expr);
        // Reject unknown parameter names up front as a usage error; value
        // problems at individual grid points stay per-row numeric failures.
        if (axis.param != "s") config_at(base, &axis, axis.grid.front());
    }

    RunOutcome out;
    switch (metric) {
        case Metric::interferer_pmf:
            if (has_sweep)
                throw std::invalid_argument("interferer_pmf uses the count axis; drop --sweep");
            out = run_pmf(base, engine, opts, s.max_k, compare, s.tolerance);
            break;
        case Metric::laplace:
            if (!has_sweep || axis.param != "s")
                throw std::invalid_argument("laplace needs --sweep s=START:STOP:STEP");
            out = run_laplace(base, axis, engine, opts, compare, s.tolerance);
            break;
        default:
            out = run_scalar(base, has_sweep ? &axis : nullptr, mode, metric, engine, opts, compare,
                             s.tolerance, s.metric_name);
            break;
    }

    std::stable_sort(out.rows.begin(), out.rows.end(), [](const ResultRow& a, const ResultRow& b) {
        const bool an = std::isfinite(a.sweep_value), bn = std::isfinite(b.sweep_value);
        if (an != bn) return bn;
        if (an && a.sweep_value != b.sweep_value) return a.sweep_value < b.sweep_value;
        return a.engine < b.engine;
    });
    const int emit_rc = emit(s, out.rows);
    if (emit_rc != 0) return emit_rc;
    if (out.numeric_failure) return 2;
    if (compare && out.breach) {
        std::cerr << "tolerance breach: at least one grid point differs by more than "
                  << format_sig9(s.tolerance) << "\n";
        return 3;
    }
    return 0;
}

int run_design(const Settings& s) {
    design::DesignTarget target;
    target.cfg = s.config_path.empty() ? NetworkConfig{} : load_config(s.config_path);
    if (s.show_derived) echo_derived(target.cfg);
    target.beta = s.beta;
    if (s.free_param == "lambda_o")
        target.free_parameter = design::FreeParam::lambda_o;
    else if (s.free_param == "lambda_s")
        target.free_parameter = design::FreeParam::lambda_s;
    else if (s.free_param == "z1")
        target.free_parameter = design::FreeParam::z1;
    else
        throw std::invalid_argument("free: expected lambda_o|lambda_s|z1, got " + s.free_param);

    design::DesignSolution sol;
    if (s.solver == "closed")
        sol = design::solve_offload_closed(target);
    else if (s.solver == "asymptotic")
        sol = design::solve_offload_asymptotic(target);
    else if (s.solver == "numeric")
        sol = design::solve_offload_numeric(target);
    else
        throw std::invalid_argument("solver: expected closed|asymptotic|numeric, got " + s.solver);

    std::cout << "feasible=" << (sol.feasible ? 1 : 0) << "\n"
              << "value=" << format_sig9(sol.value) << "\n"
              << "achieved_beta_model=" << format_sig9(sol.achieved_beta_model) << "\n"
              << "achieved_beta_exact=" << format_sig9(sol.achieved_beta_exact) << "\n";
    if (!sol.note.empty()) std::cout << "note=" << sol.note << "\n";
    return sol.feasible ? 0 : 2;
}

bool close_rel(double got, double want, double tol) {
    return std::fabs(got - want) <= tol * std::max(1.0, std::fabs(want));
}

int run_selftest() {
    int failures = 0;
    auto report = [&](const char* name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "PASS " : "FAIL ") << name;
        if (!ok && !detail.empty()) std::cout << ": " << detail;
        std::cout << "\n";
        if (!ok) ++failures;
    };

    {  // Lambert W: w e^w must reproduce the argument across the domain
        double worst = 0.0;
        for (int i = 0; i <= 10000; ++i) {
            const double x = -0.367 + i * (10000.0 + 0.367) / 10000.0;
            const double w = lambert_w0(x);
            worst = std::max(worst, std::fabs(w * std::exp(w) - x) / std::max(1.0, std::fabs(x)));
        }
        report("lambert-w round trip", worst < 1e-12, format_sig9(worst));
    }
    {  // generalized incomplete gamma vs direct quadrature, negative order
        QuadratureOptions opt;
        opt.rel_tol = 1e-13;
        const double z = -0.25, x = 0.5, y = 3.0;
        const double want =
            integrate([&](double t) { return std::pow(t, z - 1.0) * std::exp(-t); }, x, y, opt).value;
        const double got = gen_inc_gamma(z, x, y);
        report("incomplete gamma, negative order", close_rel(got, want, 1e-9),
               format_sig9(got) + " vs " + format_sig9(want));
    }
    {  // Euler identity ties three hypergeometric evaluations together
        const double a = 0.8, b = -0.4, c = 1.7;
        bool ok = true;
        std::string detail;
        for (double zz : {0.3, -0.7, -4.0}) {
            const double lhs = gauss_2f1(a, b, c, zz);
            const double rhs = std::pow(1.0 - zz, c - a - b) * gauss_2f1(c - a, c - b, c, zz);
            if (!close_rel(lhs, rhs, 1e-8)) {
                ok = false;
                detail = "z=" + format_sig9(zz);
            }
        }
        report("hypergeometric Euler identity", ok, detail);
    }
    {  // quadrature sanity on a known smooth integral and a Gaussian tail
        QuadratureOptions opt;
        const double s1 = integrate([](double t) { return std::sin(t); }, 0.0, M_PI, opt).value;
        const double s2 =
            integrate_semi_infinite([](double t) { return std::exp(-t * t); }, 0.0, 1.0, opt).value;
        report("quadrature closed answers",
               close_rel(s1, 2.0, 1e-12) && close_rel(s2, std::sqrt(M_PI) / 2.0, 1e-10),
               format_sig9(s1) + ", " + format_sig9(s2));
    }
    {  // transform boundary values pinned by construction
        NetworkConfig cfg;
        cfg.r_th = 3.0;
        cfg.r_th_unit = RthUnit::bps_hz;
        const DerivedParams d = derive(cfg);
        const bool vlc_one = std::fabs(analytic::vlc_laplace_aggregate(cfg, d, 0.7, d.t_radius) - 1.0) < 1e-12;
        const bool rf_one =
            std::fabs(analytic::rf_interference_laplace(cfg, d, 1.0, cfg.r_m_m) - 1.0) < 1e-12;
        report("interference transforms at empty annuli", vlc_one && rf_one);
    }
    {  // closed association form against the defining integral
        NetworkConfig cfg;
        cfg.r_th = 3.0;
        cfg.r_th_unit = RthUnit::bps_hz;
        cfg.k_interpretation = KInterpretation::loss;
        cfg.p_s_w = 0.01;
        cfg.alpha = 4.0;
        const double a = analytic::association_probability(cfg);
        const double b = analytic::association_probability_closed(cfg);
        report("closed association vs integral", std::fabs(a - b) < 1e-6,
               format_sig9(a) + " vs " + format_sig9(b));
    }
    return failures == 0 ? 0 : 2;
}

void add_common(CLI::App* cmd, Settings& s, bool with_engine) {
    cmd->add_option("--config", s.config_path, "flat key=value config file (defaults when omitted)");
    cmd->add_option("--mode", s.mode_name, "vlc_only|rf_only|hybrid|opportunistic");
    cmd->add_option("--metric", s.metric_name,
                    "coverage|rate|association|interferer_pmf|laplace (association ignores --mode)");
    cmd->add_option("--sweep", s.sweep_expr, "PARAM=START:STOP:STEP or PARAM=VALUE");
    cmd->add_option("--trials", s.trials, "Monte-Carlo trials per grid point");
    cmd->add_option("--seed", s.seed, "Monte-Carlo seed (same at every grid point)");
    cmd->add_option("--format", s.format, "csv|jsonl");
    cmd->add_option("--out", s.out_path, "output path (stdout when omitted)");
    cmd->add_option("--max-k", s.max_k, "largest count for interferer_pmf");
    cmd->add_option("--empty-rf", s.empty_rf,
                    "resample|outage: redraw empty RF tiers or count them as outage");
    cmd->add_flag("--no-timing", s.no_timing, "drop the seconds column for byte-identical reruns");
    cmd->add_flag("--show-derived", s.show_derived, "echo derived parameters to stderr");
    if (with_engine) cmd->add_option("--engine", s.engine_name, "mc|analytic|both");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coverage and rate toolkit for co-existing RF/VLC indoor networks"};
    app.require_subcommand(1);
    Settings s;

    CLI::App* simulate = app.add_subcommand("simulate", "Monte-Carlo engine only");
    add_common(simulate, s, false);
    CLI::App* analyze = app.add_subcommand("analyze", "analytic engine only");
    add_common(analyze, s, false);
    CLI::App* sweep = app.add_subcommand("sweep", "either or both engines over a grid");
    add_common(sweep, s, true);
    CLI::App* compare = app.add_subcommand("compare", "both engines; exit 3 beyond --tolerance");
    add_common(compare, s, false);
    compare->add_option("--tolerance", s.tolerance, "largest allowed |mc - analytic| per point");

    CLI::App* design_cmd = app.add_subcommand("design", "invert the association fraction");
    design_cmd->add_option("--config", s.config_path, "flat key=value config file");
    design_cmd->add_option("--beta", s.beta, "target optical association fraction in (0,1)");
    design_cmd->add_option("--free", s.free_param, "lambda_o|lambda_s|z1");
    design_cmd->add_option("--solver", s.solver, "closed|asymptotic|numeric");
    design_cmd->add_flag("--show-derived", s.show_derived, "echo derived parameters to stderr");

    CLI::App* selftest = app.add_subcommand("selftest", "fast numeric sanity battery");
    (void)selftest;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        if (simulate->parsed()) return run_experiment(s, Engine::mc, false);
        if (analyze->parsed()) return run_experiment(s, Engine::analytic, false);
        if (sweep->parsed()) return run_experiment(s, parse_engine(s.engine_name), false);
        if (compare->parsed()) return run_experiment(s, Engine::both, true);
        if (design_cmd->parsed()) return run_design(s);
        if (selftest->parsed()) return run_selftest();
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 1;
}

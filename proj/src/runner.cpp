#include "gevreylab/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <regex>
#include <sstream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "gevreylab/checks.hpp"
#include "gevreylab/continuation.hpp"
#include "gevreylab/diagnostics.hpp"
#include "gevreylab/initial_data.hpp"
#include "gevreylab/powerfit.hpp"
#include "gevreylab/stepper.hpp"

namespace gvl::runner {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

struct Setup {
    EquationSpec eq = EquationSpec::mkdv(-1.0);
    GridSpec grid;
    SpectralField u0;
    dynamics::IntegratorConfig icfg;
    std::uint64_t seed = 42;
    std::vector<std::string> sigma_tokens;
    std::vector<double> sigmas;
    std::vector<double> hs;
    double noise_floor = 1e-13;
    fs::path outdir;
};

EquationSpec parse_equation(const Config& cfg) {
    const std::string kind = cfg.get_string("equation.kind");
    if (kind == "mkdv") return EquationSpec::mkdv(cfg.get_real("equation.mu"));
    if (kind == "tnls")
        return EquationSpec::tnls(cfg.get_real("equation.alpha"),
                                  cfg.get_real("equation.beta"),
                                  cfg.get_real("equation.gamma"));
    throw std::invalid_argument("equation.kind: expected mkdv or tnls, got '" +
                                kind + "'");
}

Setup parse_setup(const Config& cfg) {
    Setup s;
    s.eq = parse_equation(cfg);
    s.grid = GridSpec::make(static_cast<int>(cfg.get_int("grid.n")),
                            cfg.get_real("grid.length"));
    s.seed = static_cast<std::uint64_t>(cfg.get_int("seed", 42));
    s.u0 = data::make_initial_data(s.grid, s.eq, cfg, s.seed);
    s.icfg.dt = cfg.get_real("integrator.dt");
    if (!(s.icfg.dt > 0.0))
        throw std::invalid_argument("integrator.dt must be positive");
    s.icfg.dealias = cfg.get_bool("integrator.dealias", true);
    s.icfg.reality_projection =
        cfg.get_bool("integrator.reality_projection", true);
    s.icfg.max_steps =
        static_cast<int>(cfg.get_int("integrator.max_steps", 100000000));
    // the dealiased dynamics lives in the |k| <= n/4 band; project the data
    // there so diagnostics see the simulated state, not truncation noise
    if (s.icfg.dealias) s.u0 = spectral::dealias(s.u0);
    if (cfg.has("diag.sigmas")) {
        s.sigma_tokens = cfg.get_list("diag.sigmas");
        s.sigmas = cfg.get_real_list("diag.sigmas");
    }
    for (double sg : s.sigmas) spectral::require_representable(s.grid, sg);
    if (cfg.has("diag.hs")) s.hs = cfg.get_real_list("diag.hs");
    s.noise_floor = cfg.get_real("diag.noise_floor", 1e-13);
    s.outdir = cfg.get_string("run.output", "runs/out");
    return s;
}

std::string csv_header(const EquationSpec& eq,
                       const std::vector<std::string>& sigma_tokens) {
    std::string h = "t,mass,energy,momentum_re,momentum_im,sigma_hat";
    const std::string prefix = eq.is_mkdv() ? "E_sigma_" : "M_sigma_";
    for (const auto& tok : sigma_tokens) h += "," + prefix + tok;
    for (const auto& tok : sigma_tokens) h += ",trust_" + tok;
    return h;
}

void write_record(std::ostream& out, const diag::DiagnosticsRecord& r) {
    out << g17(r.t) << ',' << g17(r.mass) << ',' << g17(r.energy) << ','
        << g17(r.momentum.real()) << ',' << g17(r.momentum.imag()) << ','
        << g17(r.sigma_hat);
    for (double v : r.gevrey) out << ',' << g17(v);
    for (bool tr : r.trusted) out << ',' << (tr ? 1 : 0);
    out << '\n';
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

double rel_drift(double v, double v0) {
    return std::abs(v - v0) / std::max(std::abs(v0), 1e-300);
}

// Exact references for the two closed-form families.
std::optional<double> exact_solution_error(const Config& cfg, const Setup& s,
                                           const SpectralField& state,
                                           double t) {
    const std::string family = cfg.get_string("data.family");
    const auto phys = to_physical(state);
    if (family == "plane_wave" && !s.eq.is_mkdv()) {
        const double A = cfg.get_real("data.A", 1.0);
        const int k = static_cast<int>(cfg.get_int("data.k", 1));
        const double xi = s.grid.xi_of_mode(k);
        const double omega = s.eq.gamma * A * A - s.eq.alpha * xi * xi -
                             s.eq.beta * xi * xi * xi;
        double err = 0.0;
        for (int j = 0; j < s.grid.n; ++j) {
            const double ph = xi * s.grid.x(j) - omega * t;
            err = std::max(err,
                           std::abs(phys[j] - A * cd(std::cos(ph), std::sin(ph))));
        }
        return err;
    }
    if (family == "soliton" && s.eq.is_mkdv()) {
        const double c = cfg.get_real("data.c", 1.0);
        const double x0 = 0.5 * s.grid.length;
        double err = 0.0;
        for (int j = 0; j < s.grid.n; ++j) {
            double arg = s.grid.x(j) - x0 - c * t;
            arg -= s.grid.length * std::round(arg / s.grid.length);
            const double exact = std::sqrt(6.0 * c) / std::cosh(std::sqrt(c) * arg);
            err = std::max(err, std::abs(phys[j] - exact));
        }
        return err;
    }
    return std::nullopt;
}

json radius_series_json(const diag::Trajectory& traj) {
    json arr = json::array();
    for (const auto& r : traj.records) {
        json row;
        row["t"] = r.t;
        row["sigma_hat"] = r.sigma_hat;
        arr.push_back(row);
    }
    return arr;
}

json drift_summary(const diag::Trajectory& traj, const EquationSpec& eq) {
    json out;
    if (traj.records.empty()) return out;
    const auto& r0 = traj.records.front();
    double dm = 0, de = 0, dp = 0, dg0 = 0;
    for (const auto& r : traj.records) {
        dm = std::max(dm, rel_drift(r.mass, r0.mass));
        if (eq.is_mkdv()) de = std::max(de, rel_drift(r.energy, r0.energy));
        else
            dp = std::max(dp, std::abs(r.momentum.imag() - r0.momentum.imag()) /
                                  std::max(std::abs(r0.momentum.imag()), 1e-300));
        for (std::size_t i = 0; i < r.sigmas.size(); ++i)
            if (r.sigmas[i] == 0.0)
                dg0 = std::max(dg0, rel_drift(r.gevrey[i], r0.gevrey[i]));
    }
    out["mass_rel"] = dm;
    if (eq.is_mkdv()) out["energy_rel"] = de;
    else out["momentum_rel"] = dp;
    out["gevrey0_rel"] = dg0;
    return out;
}

}  // namespace

int run_simulate(const Config& cfg, std::ostream& log) {
    const Setup s = parse_setup(cfg);
    const double T = cfg.get_real("run.T");
    if (!(T > 0.0)) throw std::invalid_argument("run.T must be positive");
    const double sample_dt = cfg.get_real("run.sample_dt", T / 100.0);
    const long n_samples =
        std::max(1L, static_cast<long>(std::llround(T / sample_dt)));
    const long steps_per_sample = std::max(
        1L, static_cast<long>(std::ceil(sample_dt / s.icfg.dt - 1e-12)));
    dynamics::IntegratorConfig icfg = s.icfg;
    icfg.dt = T / static_cast<double>(n_samples * steps_per_sample);

    fs::create_directories(s.outdir);
    write_text(s.outdir / "config.txt", cfg.serialize());

    diag::Trajectory traj;
    traj.eq = s.eq;
    std::ostringstream csv;
    csv << csv_header(s.eq, s.sigma_tokens) << '\n';

    SpectralField state = s.u0;
    auto record = [&](double t) {
        auto rec = diag::diagnose(state, t, s.eq, s.sigmas, s.hs, s.noise_floor);
        write_record(csv, rec);
        traj.times.push_back(t);
        traj.records.push_back(rec);
    };
    record(0.0);
    for (long i = 1; i <= n_samples; ++i) {
        state = dynamics::integrate(state, s.eq, icfg, steps_per_sample);
        record(i * T / n_samples);
    }
    write_text(s.outdir / "diagnostics.csv", csv.str());

    json summary;
    summary["status"] = "completed";
    summary["equation"] = s.eq.is_mkdv() ? "mkdv" : "tnls";
    summary["seed"] = s.seed;
    summary["T"] = T;
    summary["dt"] = icfg.dt;
    summary["final"] = {
        {"mass", traj.records.back().mass},
        {"energy", traj.records.back().energy},
        {"momentum_im", traj.records.back().momentum.imag()},
    };
    {
        json gv = json::object();
        const auto& last = traj.records.back();
        for (std::size_t i = 0; i < last.sigmas.size(); ++i)
            gv[s.sigma_tokens[i]] = last.gevrey[i];
        summary["final"]["gevrey"] = gv;
    }
    summary["drift"] = drift_summary(traj, s.eq);
    summary["radius_series"] = radius_series_json(traj);
    if (auto err = exact_solution_error(cfg, s, state, T))
        summary["final_exact_error"] = *err;
    write_text(s.outdir / "summary.json", summary.dump(2) + "\n");

    log << "simulate: wrote " << (s.outdir / "diagnostics.csv").string()
        << " (" << traj.records.size() << " samples)\n";
    return kOk;
}

int run_continuation(const Config& cfg, std::ostream& log) {
    const Setup s = parse_setup(cfg);
    const double T = cfg.get_real("run.T");
    dynamics::ContinuationParams cp;
    cp.sigma0 = cfg.get_real("continuation.sigma0");
    cp.c0 = cfg.get_real("continuation.c0", 0.1);
    cp.a = cfg.get_real("continuation.a", 3.0);
    cp.C = cfg.get_real("continuation.C", -1.0);
    cp.ell = cfg.get_real("continuation.ell", 0.75);
    cp.theta = cfg.get_real("continuation.theta", 0.24);
    cp.sigma_min = cfg.get_real("continuation.sigma_min", 0.0);
    cp.samples_per_window =
        static_cast<int>(cfg.get_int("continuation.samples_per_window", 20));
    spectral::require_representable(s.grid, cp.sigma0);

    fs::create_directories(s.outdir);
    write_text(s.outdir / "config.txt", cfg.serialize());

    const auto result = dynamics::continuation_run(
        s.u0, s.eq, cp, T, s.icfg, s.sigmas, s.noise_floor);

    std::ostringstream sched;
    sched << "T,sigma,budget_counter\n";
    for (const auto& p : result.schedule)
        sched << g17(p.t) << ',' << g17(p.sigma) << ',' << p.budget_counter
              << '\n';
    write_text(s.outdir / "schedule.csv", sched.str());

    std::ostringstream csv;
    csv << csv_header(s.eq, s.sigma_tokens) << '\n';
    for (const auto& rec : result.trajectory.records) write_record(csv, rec);
    write_text(s.outdir / "diagnostics.csv", csv.str());

    json summary;
    summary["status"] = result.status;
    summary["equation"] = s.eq.is_mkdv() ? "mkdv" : "tnls";
    summary["seed"] = s.seed;
    summary["T"] = T;
    summary["reached_time"] = result.reached_time;
    summary["rho"] = result.rho;
    summary["q0"] = result.q0;
    summary["constant"] = result.constant;
    summary["exponent"] = result.exponent;
    summary["windows"] = result.schedule.size();

    // Decay-law consistency data: calibrate at the first sigma reduction.
    const double inv_p = 1.0 / result.exponent;
    double c_cal = 0.0, min_margin = 0.0;
    std::vector<std::pair<double, double>> reduced;
    for (const auto& p : result.schedule)
        if (p.sigma < cp.sigma0) reduced.push_back({p.t, p.sigma});
    if (!reduced.empty()) {
        c_cal = reduced.front().second * std::pow(reduced.front().first, inv_p);
        min_margin = 1e300;
        for (const auto& [t, sg] : reduced)
            min_margin =
                std::min(min_margin, sg * std::pow(t, inv_p) / c_cal);
        summary["decay"] = {{"c_calibrated", c_cal},
                            {"min_margin", min_margin},
                            {"reductions", reduced.size()}};
        if (reduced.size() >= 5) {
            const auto fit = fit_power_law(reduced, reduced.front().first,
                                           reduced.back().first);
            summary["decay"]["fit"] = {{"exponent", fit.exponent},
                                       {"coefficient", fit.coefficient},
                                       {"r_squared", fit.r_squared},
                                       {"points", fit.points}};
        }
    }
    summary["drift"] = drift_summary(result.trajectory, s.eq);
    write_text(s.outdir / "summary.json", summary.dump(2) + "\n");

    log << "continue: " << result.status << ", " << result.schedule.size()
        << " windows to T = " << result.reached_time << "\n";
    return kOk;
}

namespace {

json report_json(const lab::ExpLemmaReport& r) {
    json j;
    j["check"] = "exp_lemma";
    j["params"] = {{"range", 50.0}, {"sigma_max", 5.0}};
    j["samples"] = r.samples;
    j["max_ratio"] = r.max_ratio;
    j["violations"] = r.violations;
    j["seed"] = r.seed;
    j["companion_min_bound"] = {{"max_ratio", r.max_ratio_34},
                                {"violations", r.violations_34}};
    return j;
}

json report_json(const lab::XimedReport& r) {
    json j;
    j["check"] = "ximed";
    j["params"] = {{"range", 50.0}, {"bound", 12.0}};
    j["samples"] = r.samples;
    j["max_ratio"] = r.max_ratio;
    j["violations"] = r.violations;
    j["seed"] = r.seed;
    return j;
}

json estimate_json(const lab::McEstimate& e) {
    return json{{"value", e.value},
                {"stderr", e.stderr_},
                {"samples", e.samples_used},
                {"converged", e.converged},
                {"edge_fraction", e.edge_fraction},
                {"proposal_tail_mass", e.proposal_tail_mass}};
}

struct SuiteOutcome {
    json report;
    bool pass = true;
    bool unconverged = false;
};

SuiteOutcome suite_exp_lemma(const VerifyOptions& o) {
    SuiteOutcome out;
    const auto rep = lab::check_exp_lemma(o.samples, o.seed);
    out.report = report_json(rep);
    out.pass = rep.violations == 0 && rep.violations_34 == 0;
    return out;
}

SuiteOutcome suite_ximed(const VerifyOptions& o) {
    SuiteOutcome out;
    const auto rep = lab::check_ximed(o.samples, o.seed);
    out.report = report_json(rep);
    out.pass = rep.violations == 0;
    return out;
}

SuiteOutcome suite_kernel(const VerifyOptions& o) {
    SuiteOutcome out;
    const EquationSpec eq = EquationSpec::tnls(1.0, 1.0, 1.0);
    const double s = -0.2, b = 0.6, bp = -0.1;
    lab::McConfig mc;
    mc.samples = o.mc_samples;
    mc.seed = o.seed;
    const auto e1 = lab::kernel_I(0.0, 0.0, s, b, bp, eq, mc);
    lab::McConfig mc2 = mc;
    mc2.samples = 2 * mc.samples;
    const auto e2 = lab::kernel_I(0.0, 0.0, s, b, bp, eq, mc2);
    const double gap = std::abs(e1.value - e2.value);
    const double tol = 3.0 * std::sqrt(e1.stderr_ * e1.stderr_ +
                                       e2.stderr_ * e2.stderr_);
    json sweep = json::array();
    for (double xi : {0.0, 2.0, 8.0, 32.0}) {
        const double tau = eq.phase(xi);
        const auto es = lab::kernel_I(xi, tau, s, b, bp, eq, mc);
        json row = estimate_json(es);
        row["xi"] = xi;
        row["tau"] = tau;
        sweep.push_back(row);
    }
    out.report["check"] = "kernel";
    out.report["params"] = {{"s", s},       {"b", b},
                            {"bp", bp},     {"alpha", eq.alpha},
                            {"beta", eq.beta}};
    out.report["samples"] = mc.samples;
    out.report["seed"] = o.seed;
    out.report["base"] = estimate_json(e1);
    out.report["doubled"] = estimate_json(e2);
    out.report["doubling_gap"] = gap;
    out.report["doubling_tolerance"] = tol;
    out.report["max_ratio"] =
        e1.value > 0.0 ? e1.stderr_ / e1.value : 0.0;
    out.report["violations"] = 0;
    out.report["sweep"] = sweep;
    out.unconverged = !(e1.converged && e2.converged);
    out.pass = !out.unconverged && gap <= tol;
    if (out.unconverged) out.report["violations"] = 1;
    return out;
}

lab::RatioConfig ratio_config(const VerifyOptions& o, int n, int m) {
    lab::RatioConfig rc;
    rc.trials = o.trials;
    rc.seed = o.seed;
    rc.grid = GridSpec::make(n, 8.0 * std::numbers::pi);
    rc.m = m;
    rc.t_span = 4.0 * std::numbers::pi;
    rc.band_modes = 8;
    rc.tau_band = 16;
    return rc;
}

SuiteOutcome suite_trilinear(const VerifyOptions& o) {
    SuiteOutcome out;
    const EquationSpec mkdv = EquationSpec::mkdv(-1.0);
    const EquationSpec tnls = EquationSpec::tnls(1.0, 1.0, 1.0);
    const double b = 0.6;
    const auto mk_c = lab::trilinear_ratio(ratio_config(o, 64, 64), 0.25, b,
                                           b - 1.0, mkdv);
    const auto mk_f = lab::trilinear_ratio(ratio_config(o, 128, 128), 0.25, b,
                                           b - 1.0, mkdv);
    const auto tn_c =
        lab::trilinear_ratio(ratio_config(o, 64, 64), -0.2, b, -0.1, tnls);
    const auto tn_f =
        lab::trilinear_ratio(ratio_config(o, 128, 128), -0.2, b, -0.1, tnls);
    const double g_mk = mk_f.max_ratio / mk_c.max_ratio - 1.0;
    const double g_tn = tn_f.max_ratio / tn_c.max_ratio - 1.0;
    out.report["check"] = "trilinear";
    out.report["params"] = {{"b", b}, {"s_mkdv", 0.25}, {"s_tnls", -0.2},
                            {"bp_tnls", -0.1}, {"trials", o.trials}};
    out.report["samples"] = o.trials;
    out.report["seed"] = o.seed;
    out.report["mkdv"] = {{"coarse_max", mk_c.max_ratio},
                          {"fine_max", mk_f.max_ratio},
                          {"growth", g_mk},
                          {"mean", mk_c.mean_ratio},
                          {"skipped", mk_c.skipped}};
    out.report["tnls"] = {{"coarse_max", tn_c.max_ratio},
                          {"fine_max", tn_f.max_ratio},
                          {"growth", g_tn},
                          {"mean", tn_c.mean_ratio},
                          {"skipped", tn_c.skipped}};
    out.report["max_ratio"] = std::max(mk_f.max_ratio, tn_f.max_ratio);
    out.pass = g_mk < 0.25 && g_tn < 0.25;
    out.report["violations"] = out.pass ? 0 : 1;
    out.report["label"] = "empirical boundedness";
    return out;
}

SuiteOutcome suite_strichartz(const VerifyOptions& o) {
    SuiteOutcome out;
    const double b = 0.51;
    const auto c = lab::strichartz_ratio(ratio_config(o, 64, 64), b);
    const auto f = lab::strichartz_ratio(ratio_config(o, 128, 128), b);
    const double growth = f.max_ratio / c.max_ratio - 1.0;
    out.report["check"] = "strichartz";
    out.report["params"] = {{"b", b}, {"trials", o.trials}};
    out.report["samples"] = o.trials;
    out.report["seed"] = o.seed;
    out.report["coarse_max"] = c.max_ratio;
    out.report["fine_max"] = f.max_ratio;
    out.report["growth"] = growth;
    out.report["max_ratio"] = f.max_ratio;
    out.pass = growth < 0.25;
    out.report["violations"] = out.pass ? 0 : 1;
    out.report["label"] = "empirical boundedness";
    return out;
}

}  // namespace

int run_verify(const std::string& suite, const VerifyOptions& opts,
               std::ostream& log) {
    std::vector<std::string> names;
    if (suite == "all")
        names = {"exp_lemma", "ximed", "kernel", "trilinear", "strichartz"};
    else if (suite == "exp_lemma" || suite == "ximed" || suite == "kernel" ||
             suite == "trilinear" || suite == "strichartz")
        names = {suite};
    else
        throw std::invalid_argument("verify: unknown suite '" + suite + "'");

    json doc;
    doc["suite"] = suite;
    doc["seed"] = opts.seed;
    doc["reports"] = json::array();
    bool all_pass = true, any_unconverged = false;
    for (const auto& name : names) {
        SuiteOutcome out;
        if (name == "exp_lemma") out = suite_exp_lemma(opts);
        else if (name == "ximed") out = suite_ximed(opts);
        else if (name == "kernel") out = suite_kernel(opts);
        else if (name == "trilinear") out = suite_trilinear(opts);
        else out = suite_strichartz(opts);
        out.report["pass"] = out.pass;
        doc["reports"].push_back(out.report);
        all_pass = all_pass && out.pass;
        any_unconverged = any_unconverged || out.unconverged;
    }
    doc["pass"] = all_pass;

    const std::string text = doc.dump(2) + "\n";
    if (opts.out) {
        write_text(*opts.out, text);
        log << "verify: wrote " << opts.out->string() << "\n";
    } else {
        log << text;
    }
    if (any_unconverged) return kNumericalFailure;
    return all_pass ? kOk : kAssertionFailure;
}

int run_fit(const std::filesystem::path& schedule_csv,
            std::optional<std::pair<double, double>> range,
            std::ostream& out) {
    std::ifstream in(schedule_csv);
    if (!in)
        throw std::invalid_argument("cannot open " + schedule_csv.string());
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("empty schedule file");
    std::vector<std::pair<double, double>> series;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string t_tok, s_tok;
        if (!std::getline(row, t_tok, ',') || !std::getline(row, s_tok, ','))
            throw std::invalid_argument("bad schedule row: " + line);
        series.push_back({std::stod(t_tok), std::stod(s_tok)});
    }
    double lo = range ? range->first : 0.0;
    double hi = range ? range->second
                      : (series.empty() ? 1.0 : series.back().first);
    const auto fit = fit_power_law(series, lo, hi);
    json j;
    j["exponent"] = fit.exponent;
    j["coefficient"] = fit.coefficient;
    j["r_squared"] = fit.r_squared;
    j["points"] = fit.points;
    j["range"] = {fit.t_lo, fit.t_hi};
    out << j.dump(2) << "\n";
    return kOk;
}

int run_sweep(const std::string& pattern, std::ostream& log) {
    const fs::path pat(pattern);
    const fs::path dir =
        pat.parent_path().empty() ? fs::path(".") : pat.parent_path();
    // translate the shell glob into a regex: '*' is the only wildcard
    std::string re_text;
    for (char ch : pat.filename().string()) {
        if (ch == '*') re_text += ".*";
        else if (std::string("\\^$.|?+()[]{}").find(ch) != std::string::npos)
            re_text += std::string("\\") + ch;
        else re_text += ch;
    }
    const std::regex re(re_text);
    std::vector<fs::path> files;
    if (fs::exists(dir))
        for (const auto& entry : fs::directory_iterator(dir))
            if (entry.is_regular_file() &&
                std::regex_match(entry.path().filename().string(), re))
                files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw std::invalid_argument("sweep: no configs match '" + pattern + "'");

    std::vector<int> codes(files.size(), kOk);
    std::vector<std::string> logs(files.size());
    const unsigned workers =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                        files.size()));
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= files.size()) return;
                std::ostringstream local;
                try {
                    const Config cfg = Config::parse_file(files[i]);
                    const std::string mode =
                        cfg.get_string("run.mode", "simulate");
                    codes[i] = mode == "continue"
                                   ? run_continuation(cfg, local)
                                   : run_simulate(cfg, local);
                } catch (const std::invalid_argument& e) {
                    local << files[i].string() << ": " << e.what() << "\n";
                    codes[i] = kValidationError;
                } catch (const std::exception& e) {
                    local << files[i].string() << ": " << e.what() << "\n";
                    codes[i] = kNumericalFailure;
                }
                logs[i] = local.str();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (std::size_t i = 0; i < files.size(); ++i) {
        log << "[" << files[i].string() << "] exit " << codes[i] << "\n";
        log << logs[i];
    }
    return *std::max_element(codes.begin(), codes.end());
}

}  // namespace gvl::runner

#include "gevreylab/continuation.hpp"

#include <cmath>
#include <stdexcept>

namespace gvl::dynamics {

double lifespan(double norm_G, const LifespanParams& p) {
    if (norm_G < 0.0) throw std::invalid_argument("lifespan: negative norm");
    if (!(p.c0 > 0.0) || !(p.a > 1.0))
        throw std::invalid_argument("lifespan: need c0 > 0 and a > 1");
    return p.c0 / std::pow(1.0 + norm_G * norm_G, p.a);
}

namespace {

double budget_q0(const SpectralField& u0, const EquationSpec& eq,
                 double sigma0) {
    const diag::CheckedValue v = eq.is_mkdv()
                                     ? diag::gevrey_energy(u0, sigma0, eq.mu)
                                     : diag::gevrey_mass(u0, sigma0);
    if (!std::isfinite(v.value))
        throw std::invalid_argument(
            "continuation: data has no finite Gevrey size at sigma0");
    return v.value;
}

// Dense pass over one window; used to calibrate the almost-conservation
// constant from the measured drift.
double calibrate_constant(const SpectralField& u0, const EquationSpec& eq,
                          double sigma0, double rho,
                          const IntegratorConfig& cfg, double exponent_p,
                          int samples) {
    diag::Trajectory traj;
    traj.eq = eq;
    const int n_samp = std::max(samples, 20);
    const long steps_per_sample =
        std::max(1L, static_cast<long>(std::ceil(rho / cfg.dt / n_samp)));
    IntegratorConfig dense = cfg;
    dense.dt = rho / static_cast<double>(steps_per_sample * n_samp);

    SpectralField state = u0;
    traj.times.push_back(0.0);
    traj.states.push_back(state);
    for (int i = 1; i <= n_samp; ++i) {
        state = integrate(state, eq, dense, steps_per_sample);
        traj.times.push_back(i * rho / n_samp);
        traj.states.push_back(state);
    }

    std::vector<double> sweep;
    for (double s = sigma0; s > sigma0 / 16.0; s *= 0.5) sweep.push_back(s);
    const diag::DriftTable table = diag::drift_sweep(traj, sweep, eq, exponent_p);
    return table.constant;
}

}  // namespace

ContinuationResult continuation_run(const SpectralField& u0,
                                    const EquationSpec& eq,
                                    const ContinuationParams& params, double T,
                                    const IntegratorConfig& cfg,
                                    const std::vector<double>& diag_sigmas,
                                    double noise_floor_rel) {
    if (eq.is_mkdv() && eq.mu > 0.0)
        throw std::invalid_argument(
            "continuation: focusing mKdV (mu = +1) is not admissible; the "
            "energy budget requires the defocusing case");
    if (!(T > 0.0)) throw std::invalid_argument("continuation: T <= 0");
    if (!(params.sigma0 > 0.0))
        throw std::invalid_argument("continuation: sigma0 must be positive");

    const double p = eq.is_mkdv() ? params.ell : params.theta;
    const double q0 = budget_q0(u0, eq, params.sigma0);
    const double rho =
        params.c0 / std::pow(1.0 + 2.0 * q0, params.a);

    ContinuationResult out;
    out.q0 = q0;
    out.rho = rho;
    out.exponent = p;
    out.trajectory.eq = eq;

    double constant = params.C;
    if (constant < 0.0)
        constant = calibrate_constant(u0, eq, params.sigma0, rho, cfg, p,
                                      params.samples_per_window);
    out.constant = constant;

    const long full_windows = static_cast<long>(std::floor(T / rho));
    const double tail = T - full_windows * rho;
    const long total_windows = full_windows + (tail > 1e-12 * rho ? 1 : 0);

    const long keep_every =
        std::max<long>(params.state_stride,
                       total_windows > 2000 ? total_windows / 1000 : 1);

    double sigma = params.sigma0;
    const double budget_scale = 8.0 * constant * q0 * (1.0 + q0);

    SpectralField state = u0;
    out.trajectory.times.push_back(0.0);
    out.trajectory.states.push_back(state);
    out.trajectory.records.push_back(
        diag::diagnose(state, 0.0, eq, diag_sigmas, {}, noise_floor_rel));

    out.status = "completed";
    double t = 0.0;
    for (long w = 1; w <= total_windows; ++w) {
        // Drift budget for reaching the end of window w at the current sigma.
        if (budget_scale > 0.0 &&
            static_cast<double>(w) * budget_scale * std::pow(sigma, p) > 1.0) {
            sigma = std::pow(1.0 / (static_cast<double>(w) * budget_scale),
                             1.0 / p);
            if (sigma < params.sigma_min) {
                out.status = "stopped: sigma fell below the grid trust floor";
                break;
            }
        }

        const bool partial = (w == full_windows + 1);
        const double len = partial ? tail : rho;
        const long steps = std::max(1L, static_cast<long>(std::ceil(len / cfg.dt)));
        IntegratorConfig wcfg = cfg;
        wcfg.dt = len / static_cast<double>(steps);
        state = integrate(state, eq, wcfg, steps);
        t = partial ? T : w * rho;

        out.schedule.push_back({t, sigma, w});
        if (w % keep_every == 0 || w == total_windows) {
            out.trajectory.times.push_back(t);
            out.trajectory.states.push_back(state);
            out.trajectory.records.push_back(
                diag::diagnose(state, t, eq, diag_sigmas, {}, noise_floor_rel));
        }
    }
    out.reached_time = t;
    return out;
}

}  // namespace gvl::dynamics

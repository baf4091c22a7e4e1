#pragma once

#include <string>
#include <vector>

#include "gevreylab/diagnostics.hpp"
#include "gevreylab/stepper.hpp"

namespace gvl::dynamics {

// Guaranteed local existence time c0 / (1 + ||data||^2)^a.
struct LifespanParams {
    double c0 = 0.1;
    double a = 3.0;
    double sigma = 0.0;
    double s = 0.0;
};

double lifespan(double norm_G, const LifespanParams& p);

struct SchedulePoint {
    double t = 0.0;
    double sigma = 0.0;
    long budget_counter = 0;  // window index the budget was checked against
};

struct ContinuationParams {
    double sigma0 = 0.1;
    double c0 = 0.1;
    double a = 3.0;
    // Almost-conservation constant; negative requests calibration from a
    // preliminary sigma-sweep of the measured first-window drift.
    double C = -1.0;
    double ell = 0.75;    // mKdV budget exponent
    double theta = 0.24;  // tNLS budget exponent
    double sigma_min = 0.0;
    int samples_per_window = 20;
    int state_stride = 1;  // keep every k-th sampled state in the trajectory
};

struct ContinuationResult {
    diag::Trajectory trajectory;
    std::vector<SchedulePoint> schedule;
    std::string status;       // "completed" or "stopped: ..."
    double reached_time = 0.0;
    double rho = 0.0;         // window length
    double q0 = 0.0;          // E_sigma0(0) or M_sigma0(0)
    double constant = 0.0;    // C actually used
    double exponent = 0.0;    // ell or theta actually used
};

// Window-by-window advance with the almost-conservation drift budget
//   n * 8 C sigma^p Q0 (1 + Q0) <= 1,
// reducing sigma to the equality point whenever the budget is spent.
// Refuses focusing mKdV. Stops early (with partial results) when sigma
// falls below params.sigma_min.
ContinuationResult continuation_run(const SpectralField& u0,
                                    const EquationSpec& eq,
                                    const ContinuationParams& params, double T,
                                    const IntegratorConfig& cfg,
                                    const std::vector<double>& diag_sigmas = {},
                                    double noise_floor_rel = 1e-13);

}  // namespace gvl::dynamics

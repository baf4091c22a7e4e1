#pragma once

#include <cstdint>
#include <vector>

#include "gevreylab/equation.hpp"
#include "gevreylab/grid.hpp"

namespace gvl::lab {

// Sampled verification of the three-exponential difference bound
//   e^{s|a|}e^{s|b|}e^{s|g|} - e^{s|a+b+g|}
//     <= [2 s min(|a|+|b|, |a|+|g|, |b|+|g|)]^theta * product,
// evaluated in log space. Also samples the companion bound
//   min{...} <= 3 <a-b-g><g><b> / <a> on the same draws.
struct ExpLemmaReport {
    long samples = 0;
    std::uint64_t seed = 0;
    long violations = 0;
    double max_ratio = 0.0;        // LHS / RHS, expected <= 1
    long violations_34 = 0;
    double max_ratio_34 = 0.0;
};
ExpLemmaReport check_exp_lemma(long samples, std::uint64_t seed);

// Sampled verification of |x1|+|x2|+|x3| - |x1+x2+x3| <= 12 * mid(|x_i|).
struct XimedReport {
    long samples = 0;
    std::uint64_t seed = 0;
    long violations = 0;
    double max_ratio = 0.0;        // LHS / mid, expected <= 12 (sharp: 4)
};
XimedReport check_ximed(long samples, std::uint64_t seed);

struct McConfig {
    long samples = 1000000;
    std::uint64_t seed = 42;
    double truncation = 1e4;       // half-width of the sampling box
    double proposal_tail = 2.0;    // tail exponent of the xi proposals
};

struct McEstimate {
    double value = 0.0;
    double stderr_ = 0.0;
    long samples_used = 0;
    std::uint64_t seed = 0;
    bool converged = false;        // stderr / value <= 0.2
    double proposal_tail_mass = 0.0;  // proposal mass outside the box
    // share of the estimate carried by samples in the outer decade of the
    // box; the integrand decays two powers faster than the proposal, so a
    // small value certifies the truncation empirically
    double edge_fraction = 0.0;
};

// Importance-sampled estimate of the squared-kernel integral
// I(xi, tau) = int K(eta, eta1, eta2)^2 d eta1 d eta2 for the cubic
// third-order-dispersion phase. Hypotheses -1/4 < s <= 0, b > 7/12,
// bp < s/3 are enforced.
McEstimate kernel_I(double xi, double tau, double s, double b, double bp,
                    const EquationSpec& eq, const McConfig& mc);

// Pointwise kernel value (exposed for direct checks).
double kernel_K(double xi, double tau, double xi1, double tau1, double xi2,
                double tau2, double s, double b, double bp,
                const EquationSpec& eq);

// Empirical ratio protocol for the trilinear and product estimates on
// randomized band-limited space-time fields built around the dispersive
// characteristic.
struct RatioStats {
    int trials = 0;
    int skipped = 0;
    double max_ratio = 0.0;
    double mean_ratio = 0.0;
};

struct RatioConfig {
    int trials = 200;
    std::uint64_t seed = 7;
    GridSpec grid;            // spatial grid
    int m = 64;               // time samples
    double t_span = 0.0;      // duration; default 0 -> grid.length / 2
    int band_modes = 0;       // spectral band half-width; default n/8
    int tau_band = 0;         // time-frequency band; default m/8
    double char_width = 2.0;  // Gaussian width around tau = phase(xi)
    double off_noise = 0.05;  // off-characteristic noise floor
};

// mKdV: || d_x(u1 u2 u3) ||_{X^{1/4, b-1}} / prod || u_i ||_{X^{1/4, b}}.
// tNLS: || u1 u2 conj(u3) ||_{X^{s, bp}} / prod || u_i ||_{X^{s, b}}.
RatioStats trilinear_ratio(const RatioConfig& rc, double s, double b,
                           double bp, const EquationSpec& eq);

// || u1 u2 u3 ||_{L2_xt} / prod || u_i ||_{X^{0, b}} with the mKdV phase.
RatioStats strichartz_ratio(const RatioConfig& rc, double b);

}  // namespace gvl::lab

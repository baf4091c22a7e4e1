#include "gevreylab/picard.hpp"

#include <cmath>
#include <stdexcept>

#include "gevreylab/fft.hpp"
#include "gevreylab/kernels.hpp"
#include "gevreylab/spectral.hpp"
#include "gevreylab/stepper.hpp"

namespace gvl::dynamics {

namespace {

// Cumulative integral of the vector-valued samples g_0..g_{m-1} on a uniform
// grid: Simpson pairs plus the three-point end correction on odd prefixes.
void cumulative_quadrature(const std::vector<std::vector<cd>>& g, double h,
                           std::vector<std::vector<cd>>& out) {
    const std::size_t m = g.size(), n = g[0].size();
    out.assign(m, std::vector<cd>(n, cd(0.0, 0.0)));
    for (std::size_t i = 1; i < m; ++i) {
        if (i == 1) {
            // quadratic through g0, g1, g2 integrated over [t0, t1]
            for (std::size_t j = 0; j < n; ++j)
                out[1][j] = (h / 12.0) * (5.0 * g[0][j] + 8.0 * g[1][j] - g[2][j]);
        } else if (i % 2 == 0) {
            for (std::size_t j = 0; j < n; ++j)
                out[i][j] = out[i - 2][j] + (h / 3.0) * (g[i - 2][j] +
                                                         4.0 * g[i - 1][j] +
                                                         g[i][j]);
        } else {
            for (std::size_t j = 0; j < n; ++j)
                out[i][j] = out[i - 1][j] + (h / 12.0) * (-g[i - 2][j] +
                                                          8.0 * g[i - 1][j] +
                                                          5.0 * g[i][j]);
        }
    }
}

}  // namespace

PicardResult picard_solve(const SpectralField& u0, const EquationSpec& eq,
                          double T, int iterations, int m) {
    if (iterations < 1)
        throw std::invalid_argument("picard: iterations must be >= 1");
    if (m < 8) throw std::invalid_argument("picard: need at least 8 samples");
    if (!(T > 0.0)) throw std::invalid_argument("picard: T must be positive");

    const GridSpec& g = u0.grid();
    const int n = g.n;
    const double h = T / (m - 1);

    // Propagator tables e^{+-i t_i phase}.
    std::vector<std::vector<cd>> prop(m, std::vector<cd>(n));
    std::vector<std::vector<cd>> prop_inv(m, std::vector<cd>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            const double ph = (i * h) * eq.phase(g.xi_of_index(j));
            prop[i][j] = cd(std::cos(ph), std::sin(ph));
            prop_inv[i][j] = std::conj(prop[i][j]);
        }

    std::vector<cd> c0(u0.coeffs().begin(), u0.coeffs().end());

    // w^0(t_i) = W(t_i) u0
    std::vector<std::vector<cd>> w(m, c0);
    for (int i = 0; i < m; ++i)
        kernels::cmul_inplace(w[i].data(), prop[i].data(), n);

    PicardResult result;
    std::vector<std::vector<cd>> nl(m), S;
    double prev_delta = -1.0;
    for (int it = 0; it < iterations; ++it) {
        for (int i = 0; i < m; ++i) {
            SpectralField state(g, w[i], u0.is_real_field());
            SpectralField nterm = nonlinear_term(state, eq);
            nl[i].assign(nterm.coeffs().begin(), nterm.coeffs().end());
            // move to the frame of t = 0: W(-t_i) N_i
            kernels::cmul_inplace(nl[i].data(), prop_inv[i].data(), n);
        }
        cumulative_quadrature(nl, h, S);

        double delta_sq = 0.0;
        for (int i = 0; i < m; ++i) {
            // nonlinear_term carries the right-hand-side sign, so the
            // Duhamel correction adds
            std::vector<cd> next(n);
            for (int j = 0; j < n; ++j) next[j] = c0[j] + S[i][j];
            kernels::cmul_inplace(next.data(), prop[i].data(), n);
            for (int j = 0; j < n; ++j) delta_sq += std::norm(next[j] - w[i][j]);
            w[i] = std::move(next);
        }
        const double delta = std::sqrt(g.length * delta_sq / m);
        result.iterate_deltas.push_back(delta);
        if (prev_delta >= 0.0 && delta > 2.0 * prev_delta && delta > 1e-14)
            throw std::runtime_error("outside contraction regime");
        prev_delta = delta;
    }

    result.field = spacetime::make_spacetime(g, 0.0, h, m,
                                             spacetime::TimeWindow::boxcar);
    for (int i = 0; i < m; ++i) {
        std::vector<cd> phys(n);
        fft::backward(n, w[i].data(), phys.data());
        for (int j = 0; j < n; ++j) result.field.at(i, j) = phys[j];
    }
    result.spectral = std::move(w);
    return result;
}

}  // namespace gvl::dynamics

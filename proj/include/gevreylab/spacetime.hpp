#pragma once

#include <vector>

#include "gevreylab/equation.hpp"
#include "gevreylab/field.hpp"

namespace gvl::spacetime {

enum class TimeWindow { hann, boxcar };

// Uniform space-time sample block: m time slices of n physical-space
// samples, plus a taper over the time axis. Time frequencies follow the
// same transform-order convention as the spatial grid, tau_r = 2 pi r / (m dt).
struct SpaceTimeField {
    GridSpec grid;
    double t0 = 0.0;
    double dt = 0.0;
    int m = 0;
    std::vector<cd> values;        // row-major, values[i*n + j]
    std::vector<double> window;    // m weights in [0, 1]

    double t(int i) const { return t0 + i * dt; }
    double duration() const { return m * dt; }
    double tau_of_index(int r) const;
    cd& at(int i, int j) { return values[static_cast<std::size_t>(i) * grid.n + j]; }
    cd at(int i, int j) const {
        return values[static_cast<std::size_t>(i) * grid.n + j];
    }
};

SpaceTimeField make_spacetime(const GridSpec& grid, double t0, double dt,
                              int m, TimeWindow window = TimeWindow::hann);

std::vector<double> make_window(int m, TimeWindow window);

// Windowed 2-D transform, then the weighted l2 sum with weight
// <xi>^{2s} <tau - phase(xi)>^{2b} and the L*T Plancherel factor.
// Requires m >= 8 and b in (-1, 1). extra_dx weights the sum by |xi|^2
// (the norm of the x-derivative without forming it).
double xsb_norm(const SpaceTimeField& f, double s, double b,
                const EquationSpec& eq, bool extra_dx = false);

// L2 norm over the box and the sampled time span (no window).
double l2_norm(const SpaceTimeField& f);

// Pointwise product of three fields; conj_third for products u1 u2 conj(u3).
SpaceTimeField pointwise_triple(const SpaceTimeField& a,
                                const SpaceTimeField& b,
                                const SpaceTimeField& c, bool conj_third);

}  // namespace gvl::spacetime

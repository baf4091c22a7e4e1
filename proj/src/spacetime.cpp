#include "gevreylab/spacetime.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gevreylab/fft.hpp"
#include "gevreylab/kernels.hpp"

namespace gvl::spacetime {

double SpaceTimeField::tau_of_index(int r) const {
    const int rm = r < m / 2 ? r : r - m;
    return 2.0 * std::numbers::pi * rm / duration();
}

std::vector<double> make_window(int m, TimeWindow window) {
    std::vector<double> w(m, 1.0);
    if (window == TimeWindow::hann) {
        for (int i = 0; i < m; ++i) {
            const double c = std::cos(2.0 * std::numbers::pi * i / m);
            w[i] = 0.5 * (1.0 - c);
        }
    }
    return w;
}

SpaceTimeField make_spacetime(const GridSpec& grid, double t0, double dt,
                              int m, TimeWindow window) {
    if (m < 8) throw std::invalid_argument("spacetime: degenerate time axis (m < 8)");
    if (!(dt > 0.0)) throw std::invalid_argument("spacetime: dt <= 0");
    SpaceTimeField f;
    f.grid = grid;
    f.t0 = t0;
    f.dt = dt;
    f.m = m;
    f.values.assign(static_cast<std::size_t>(m) * grid.n, cd(0.0, 0.0));
    f.window = make_window(m, window);
    return f;
}

double xsb_norm(const SpaceTimeField& f, double s, double b,
                const EquationSpec& eq, bool extra_dx) {
    if (f.m < 8)
        throw std::invalid_argument("xsb_norm: degenerate time axis (m < 8)");
    if (!(b > -1.0 && b < 1.0))
        throw std::invalid_argument("xsb_norm: b must lie in (-1, 1)");

    const int n = f.grid.n, m = f.m;
    std::vector<cd> buf(f.values);
    for (int i = 0; i < m; ++i) {
        const double w = f.window[i];
        for (int j = 0; j < n; ++j) buf[static_cast<std::size_t>(i) * n + j] *= w;
    }
    std::vector<cd> hat(buf.size());
    fft::forward_2d(m, n, buf.data(), hat.data());
    const double scale = 1.0 / (static_cast<double>(n) * m);

    double acc = 0.0;
    for (int r = 0; r < m; ++r) {
        const double tau = f.tau_of_index(r);
        for (int j = 0; j < n; ++j) {
            const double xi = f.grid.xi_of_index(j);
            const double wxi = std::pow(1.0 + std::abs(xi), 2.0 * s);
            const double wtau =
                std::pow(1.0 + std::abs(tau - eq.phase(xi)), 2.0 * b);
            const cd z = hat[static_cast<std::size_t>(r) * n + j] * scale;
            double w = wxi * wtau;
            if (extra_dx) w *= xi * xi;
            acc += w * std::norm(z);
        }
    }
    return std::sqrt(f.grid.length * f.duration() * acc);
}

double l2_norm(const SpaceTimeField& f) {
    const double sum =
        kernels::abs_pow_sum(f.values.data(), 2, f.values.size());
    return std::sqrt(sum * f.grid.dx() * f.dt);
}

SpaceTimeField pointwise_triple(const SpaceTimeField& a,
                                const SpaceTimeField& b,
                                const SpaceTimeField& c, bool conj_third) {
    if (a.grid != b.grid || a.grid != c.grid || a.m != b.m || a.m != c.m)
        throw std::invalid_argument("pointwise_triple: shape mismatch");
    SpaceTimeField out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        const cd third = conj_third ? std::conj(c.values[i]) : c.values[i];
        out.values[i] = a.values[i] * b.values[i] * third;
    }
    return out;
}

}  // namespace gvl::spacetime

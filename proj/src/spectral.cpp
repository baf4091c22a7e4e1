#include "gevreylab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gevreylab/kernels.hpp"

namespace gvl::spectral {

void require_representable(const GridSpec& grid, double sigma) {
    if (std::abs(sigma) * grid.xi_max() > kSigmaXiCap)
        throw trust_radius_error(
            "sigma beyond trust radius of grid: |sigma|*xi_max = " +
            std::to_string(std::abs(sigma) * grid.xi_max()) + " > " +
            std::to_string(kSigmaXiCap));
}

bool weight_trusted(const SpectralField& f, double sigma, double value) {
    if (sigma <= 0.0) return true;
    const double l2 = l2_norm(f);
    if (l2 == 0.0) return true;
    // exact zeros (dealiased band) carry no round-off to amplify; gauge the
    // amplification at the top occupied mode
    double xi_top = 0.0;
    for (int i = 0; i < f.grid().n; ++i)
        if (f.coeffs()[i] != cd(0.0, 0.0))
            xi_top = std::max(xi_top, std::abs(f.grid().xi_of_index(i)));
    const double amplified = std::exp(sigma * xi_top) * 1e-16 * l2;
    return amplified <= 1e-3 * std::max(value, 1e-300);
}

SpectralField apply_derivative(const SpectralField& f, int order) {
    if (order < 1 || order > 3)
        throw std::invalid_argument("apply_derivative: order must be 1, 2 or 3");
    const GridSpec& g = f.grid();
    std::vector<cd> out(g.n);
    for (int i = 0; i < g.n; ++i) {
        const double xi = g.xi_of_index(i);
        cd m;
        switch (order) {
            case 1: m = cd(0.0, xi); break;
            case 2: m = cd(-xi * xi, 0.0); break;
            default: m = cd(0.0, -xi * xi * xi); break;
        }
        out[i] = m * f.coeffs()[i];
    }
    out[g.index_of_mode(-g.n / 2)] = cd(0.0, 0.0);
    return SpectralField(g, std::move(out), f.is_real_field());
}

SpectralField apply_gevrey(const SpectralField& f, double sigma) {
    const GridSpec& g = f.grid();
    if (sigma == 0.0)
        return SpectralField(g, std::vector<cd>(f.coeffs().begin(),
                                                f.coeffs().end()),
                             f.is_real_field());
    require_representable(g, sigma);
    std::vector<double> w(g.n);
    for (int i = 0; i < g.n; ++i)
        w[i] = std::exp(sigma * std::abs(g.xi_of_index(i)));
    std::vector<cd> out(f.coeffs().begin(), f.coeffs().end());
    kernels::rmul_inplace(out.data(), w.data(), g.n);
    return SpectralField(g, std::move(out), f.is_real_field());
}

SpectralField dealias(const SpectralField& f) {
    const GridSpec& g = f.grid();
    std::vector<cd> out(f.coeffs().begin(), f.coeffs().end());
    const int keep = g.n / 4;
    for (int i = 0; i < g.n; ++i)
        if (std::abs(g.mode_of_index(i)) > keep) out[i] = cd(0.0, 0.0);
    return SpectralField(g, std::move(out), f.is_real_field());
}

double gevrey_norm(const SpectralField& f, const GevreyParams& p) {
    return gevrey_norm_checked(f, p).value;
}

CheckedNorm gevrey_norm_checked(const SpectralField& f,
                                const GevreyParams& p) {
    const GridSpec& g = f.grid();
    require_representable(g, p.sigma);
    std::vector<double> w(g.n);
    for (int i = 0; i < g.n; ++i) {
        const double axi = std::abs(g.xi_of_index(i));
        w[i] = g.length * std::pow(1.0 + axi, 2.0 * p.s) *
               std::exp(2.0 * p.sigma * axi);
    }
    const double sq = kernels::weighted_abs2_sum(w.data(), f.data(), g.n);
    CheckedNorm out;
    out.value = std::sqrt(sq);
    out.trusted = weight_trusted(f, p.sigma, out.value);
    return out;
}

double l2_norm(const SpectralField& f) {
    return std::sqrt(f.grid().length *
                     kernels::abs_pow_sum(f.data(), 2, f.grid().n));
}

double lp_norm(const SpectralField& f, int p) {
    if (p != 2 && p != 4 && p != 6)
        throw std::invalid_argument("lp_norm: p must be 2, 4 or 6");
    const auto phys = to_physical(f);
    const double sum = kernels::abs_pow_sum(phys.data(), p, phys.size());
    return std::pow(sum * f.grid().dx(), 1.0 / p);
}

}  // namespace gvl::spectral

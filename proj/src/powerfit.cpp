#include "gevreylab/powerfit.hpp"

#include <cmath>
#include <stdexcept>

namespace gvl {

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& series,
                          double t_lo, double t_hi) {
    std::vector<double> lx, ly;
    for (const auto& [t, sigma] : series) {
        if (t < t_lo || t > t_hi) continue;
        if (!(t > 0.0) || !(sigma > 0.0)) continue;
        lx.push_back(std::log(t));
        ly.push_back(std::log(sigma));
    }
    if (lx.size() < 5)
        throw std::invalid_argument(
            "fit_power_law: fewer than 5 usable points in range");

    const double n = static_cast<double>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
        syy += ly[i] * ly[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom <= 0.0)
        throw std::invalid_argument("fit_power_law: degenerate abscissas");

    PowerLawFit fit;
    fit.exponent = (n * sxy - sx * sy) / denom;
    fit.coefficient = std::exp((sy - fit.exponent * sx) / n);
    const double varied = n * syy - sy * sy;
    if (varied > 0.0) {
        const double r = (n * sxy - sx * sy) / std::sqrt(denom * varied);
        fit.r_squared = r * r;
    } else {
        fit.r_squared = 1.0;  // constant series fitted exactly
    }
    fit.t_lo = t_lo;
    fit.t_hi = t_hi;
    fit.points = static_cast<int>(lx.size());
    return fit;
}

}  // namespace gvl

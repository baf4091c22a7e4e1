#pragma once

#include <utility>
#include <vector>

namespace gvl {

struct PowerLawFit {
    double exponent = 0.0;
    double coefficient = 0.0;
    double r_squared = 0.0;
    double t_lo = 0.0, t_hi = 0.0;
    int points = 0;
};

// Least squares of log(sigma) against log(T) over pairs with T in
// [t_lo, t_hi] and sigma > 0. Throws std::invalid_argument with fewer than
// five usable points.
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& series,
                          double t_lo, double t_hi);

}  // namespace gvl

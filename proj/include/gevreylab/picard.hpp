#pragma once

#include <vector>

#include "gevreylab/equation.hpp"
#include "gevreylab/field.hpp"
#include "gevreylab/spacetime.hpp"

namespace gvl::dynamics {

struct PicardResult {
    spacetime::SpaceTimeField field;            // physical samples
    std::vector<std::vector<cd>> spectral;      // per-sample coefficients
    std::vector<double> iterate_deltas;         // successive-iterate L2 gaps
};

// Fixed-point iteration of the integral form of the IVP on m uniform
// samples of [0, T]:
//   w_{j+1}(t) = W(t) u0 - int_0^t W(t-t') N(w_j)(t') dt',
// with the time integral by cumulative composite Simpson quadrature.
// Throws std::runtime_error("outside contraction regime") if the iterate
// gap doubles instead of contracting.
PicardResult picard_solve(const SpectralField& u0, const EquationSpec& eq,
                          double T, int iterations, int m);

}  // namespace gvl::dynamics

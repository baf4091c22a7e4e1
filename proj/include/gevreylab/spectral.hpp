#pragma once

#include <stdexcept>

#include "gevreylab/field.hpp"

namespace gvl::spectral {

// (sigma, s): exponential strip half-width and Sobolev index of the
// weighted norm ( L * sum <xi>^{2s} e^{2 sigma |xi|} |c_k|^2 )^{1/2},
// <xi> = 1 + |xi|. The factor L makes the sigma = s = 0 case equal the
// physical-space L2 norm over the box.
struct GevreyParams {
    double sigma = 0.0;
    double s = 0.0;
};

// Hard cap on sigma * xi_max (natural-log units): beyond this the
// exponential weight is not representable on the grid at all.
inline constexpr double kSigmaXiCap = 600.0;

class trust_radius_error : public std::domain_error {
public:
    explicit trust_radius_error(const std::string& what)
        : std::domain_error(what) {}
};

// Throws trust_radius_error if |sigma| * xi_max exceeds the cap.
void require_representable(const GridSpec& grid, double sigma);
// True when the exponentially amplified round-off at the top mode stays
// below 1e-3 of the computed norm.
bool weight_trusted(const SpectralField& f, double sigma, double value);

// Coefficient at mode k multiplied by (i xi_k)^order, order in {1,2,3}.
// The unpaired mode -n/2 is always zeroed.
SpectralField apply_derivative(const SpectralField& f, int order);

// Coefficient at mode k multiplied by e^{sigma |xi_k|}; sigma < 0 smooths.
// sigma == 0 returns an exact copy.
SpectralField apply_gevrey(const SpectralField& f, double sigma);

// Zeroes every mode with |k| > n/4 (cubic-product rule) plus mode -n/2.
SpectralField dealias(const SpectralField& f);

double gevrey_norm(const SpectralField& f, const GevreyParams& p);

struct CheckedNorm {
    double value = 0.0;
    bool trusted = true;
};
CheckedNorm gevrey_norm_checked(const SpectralField& f, const GevreyParams& p);

// L2 norm over the box (Plancherel with the L weight).
double l2_norm(const SpectralField& f);

// ( (L/n) * sum_j |f(x_j)|^p )^{1/p} for p in {2, 4, 6}.
double lp_norm(const SpectralField& f, int p);

}  // namespace gvl::spectral

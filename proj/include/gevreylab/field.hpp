#pragma once

#include <complex>
#include <span>
#include <vector>

#include "gevreylab/grid.hpp"

namespace gvl {

using cd = std::complex<double>;

// One complex coefficient per grid mode, transform order. Fields flagged
// real_field carry the constraint c[-k] = conj(c[k]); all states of the
// real-valued equation keep the flag so operators can re-project.
class SpectralField {
public:
    SpectralField() = default;
    SpectralField(GridSpec grid, std::vector<cd> coeffs, bool real_field);

    static SpectralField zero(const GridSpec& grid, bool real_field = false);

    const GridSpec& grid() const { return grid_; }
    int n() const { return grid_.n; }
    bool is_real_field() const { return real_field_; }
    void set_real_field(bool v) { real_field_ = v; }

    std::span<const cd> coeffs() const { return coeffs_; }
    std::span<cd> coeffs() { return coeffs_; }
    const cd* data() const { return coeffs_.data(); }
    cd* data() { return coeffs_.data(); }

    cd coeff(int mode) const { return coeffs_[grid_.index_of_mode(mode)]; }
    void set_coeff(int mode, cd v) { coeffs_[grid_.index_of_mode(mode)] = v; }

    // max_k |c[-k] - conj(c[k])| relative to the largest coefficient.
    double reality_defect() const;
    // Orthogonal projection onto conjugate-symmetric coefficients; also
    // zeroes the unpaired mode and the imaginary part of the mean.
    void project_real();

private:
    GridSpec grid_;
    std::vector<cd> coeffs_;
    bool real_field_ = false;
};

// Analysis: samples -> amplitude coefficients (coefficient of e^{i xi_k x}).
SpectralField to_spectral(const GridSpec& grid, std::span<const cd> samples,
                          bool real_field = false);
SpectralField to_spectral(const GridSpec& grid,
                          std::span<const double> samples);

// Synthesis at the collocation points.
std::vector<cd> to_physical(const SpectralField& f);
// Synthesis of a real field; throws if the imaginary residue is large.
std::vector<double> to_physical_real(const SpectralField& f);

}  // namespace gvl

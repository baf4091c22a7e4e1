#include "gevreylab/field.hpp"

#include <cmath>
#include <stdexcept>

#include "gevreylab/fft.hpp"
#include "gevreylab/kernels.hpp"

namespace gvl {

SpectralField::SpectralField(GridSpec grid, std::vector<cd> coeffs,
                             bool real_field)
    : grid_(grid), coeffs_(std::move(coeffs)), real_field_(real_field) {
    if (static_cast<int>(coeffs_.size()) != grid_.n)
        throw std::invalid_argument("field: coefficient count != grid.n");
}

SpectralField SpectralField::zero(const GridSpec& grid, bool real_field) {
    return SpectralField(grid, std::vector<cd>(grid.n), real_field);
}

double SpectralField::reality_defect() const {
    const int n = grid_.n;
    double worst = 0.0;
    for (int k = 1; k < n / 2; ++k) {
        const cd d = coeffs_[grid_.index_of_mode(-k)] - std::conj(coeffs_[k]);
        worst = std::max(worst, std::abs(d));
    }
    worst = std::max(worst, std::abs(coeffs_[0].imag()));
    const double scale = kernels::max_abs(coeffs_.data(), coeffs_.size());
    return scale > 0.0 ? worst / scale : worst;
}

void SpectralField::project_real() {
    const int n = grid_.n;
    coeffs_[0] = cd(coeffs_[0].real(), 0.0);
    coeffs_[grid_.index_of_mode(-n / 2)] = cd(0.0, 0.0);
    for (int k = 1; k < n / 2; ++k) {
        const int ip = k, im = grid_.index_of_mode(-k);
        const cd mean = 0.5 * (coeffs_[ip] + std::conj(coeffs_[im]));
        coeffs_[ip] = mean;
        coeffs_[im] = std::conj(mean);
    }
}

SpectralField to_spectral(const GridSpec& grid, std::span<const cd> samples,
                          bool real_field) {
    if (static_cast<int>(samples.size()) != grid.n)
        throw std::invalid_argument("to_spectral: sample count != grid.n");
    std::vector<cd> out(grid.n);
    fft::forward(grid.n, samples.data(), out.data());
    const double inv = 1.0 / grid.n;
    for (auto& c : out) c *= inv;
    return SpectralField(grid, std::move(out), real_field);
}

SpectralField to_spectral(const GridSpec& grid,
                          std::span<const double> samples) {
    if (static_cast<int>(samples.size()) != grid.n)
        throw std::invalid_argument("to_spectral: sample count != grid.n");
    std::vector<cd> buf(samples.begin(), samples.end());
    return to_spectral(grid, std::span<const cd>(buf), true);
}

std::vector<cd> to_physical(const SpectralField& f) {
    std::vector<cd> out(f.n());
    fft::backward(f.n(), f.data(), out.data());
    return out;
}

std::vector<double> to_physical_real(const SpectralField& f) {
    const auto z = to_physical(f);
    const double scale = std::max(kernels::max_abs(z.data(), z.size()), 1e-300);
    std::vector<double> out(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) {
        if (std::abs(z[j].imag()) > 1e-8 * scale)
            throw std::invalid_argument(
                "to_physical_real: field has a non-negligible imaginary part");
        out[j] = z[j].real();
    }
    return out;
}

}  // namespace gvl

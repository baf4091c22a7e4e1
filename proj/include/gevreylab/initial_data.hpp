#pragma once

#include <cstdint>

#include "gevreylab/config.hpp"
#include "gevreylab/equation.hpp"
#include "gevreylab/field.hpp"

namespace gvl::data {

// Named initial-data families, selected by data.family in a config:
//   soliton{c}            sqrt(6c) sech(sqrt(c)(x - L/2)); mKdV travelling wave
//   sech{A, w}            A sech((x - L/2)/w)
//   plane_wave{A, k}      A e^{i k (2 pi / L) x}
//   poisson_kernel{sigma0, A}  coefficients A e^{-sigma0 |xi_k|}
//   random_band{k_max, A}      random coefficients on 1 <= |k| <= k_max
SpectralField make_initial_data(const GridSpec& grid, const EquationSpec& eq,
                                const Config& cfg, std::uint64_t seed);

SpectralField soliton(const GridSpec& grid, double c);
SpectralField sech_profile(const GridSpec& grid, double amplitude,
                           double width, bool real_field);
SpectralField plane_wave(const GridSpec& grid, double amplitude, int mode);
SpectralField poisson_kernel(const GridSpec& grid, double sigma0,
                             double amplitude);
SpectralField random_band(const GridSpec& grid, int k_max, double amplitude,
                          bool real_field, std::uint64_t seed);

}  // namespace gvl::data

#include "gevreylab/initial_data.hpp"

#include <cmath>
#include <stdexcept>

#include "gevreylab/rng.hpp"

namespace gvl::data {

namespace {

SpectralField from_real_profile(const GridSpec& g, auto&& profile) {
    std::vector<double> samples(g.n);
    for (int j = 0; j < g.n; ++j) samples[j] = profile(g.x(j));
    return to_spectral(g, std::span<const double>(samples));
}

}  // namespace

SpectralField soliton(const GridSpec& g, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("soliton: speed c must be > 0");
    const double x0 = 0.5 * g.length;
    return from_real_profile(g, [&](double x) {
        return std::sqrt(6.0 * c) / std::cosh(std::sqrt(c) * (x - x0));
    });
}

SpectralField sech_profile(const GridSpec& g, double amplitude, double width,
                           bool real_field) {
    if (!(width > 0.0)) throw std::invalid_argument("sech: width must be > 0");
    const double x0 = 0.5 * g.length;
    SpectralField f = from_real_profile(
        g, [&](double x) { return amplitude / std::cosh((x - x0) / width); });
    f.set_real_field(real_field);
    return f;
}

SpectralField plane_wave(const GridSpec& g, double amplitude, int mode) {
    if (mode <= -g.n / 2 || mode >= g.n / 2)
        throw std::invalid_argument("plane_wave: mode outside the grid");
    SpectralField f = SpectralField::zero(g, false);
    f.set_coeff(mode, cd(amplitude, 0.0));
    return f;
}

SpectralField poisson_kernel(const GridSpec& g, double sigma0,
                             double amplitude) {
    if (!(sigma0 > 0.0))
        throw std::invalid_argument("poisson_kernel: sigma0 must be > 0");
    SpectralField f = SpectralField::zero(g, true);
    for (int i = 0; i < g.n; ++i) {
        const int k = g.mode_of_index(i);
        if (k == -g.n / 2) continue;
        f.coeffs()[i] =
            cd(amplitude * std::exp(-sigma0 * std::abs(g.xi_of_index(i))), 0.0);
    }
    return f;
}

SpectralField random_band(const GridSpec& g, int k_max, double amplitude,
                          bool real_field, std::uint64_t seed) {
    if (k_max < 1 || k_max >= g.n / 2)
        throw std::invalid_argument("random_band: k_max outside the grid");
    SpectralField f = SpectralField::zero(g, real_field);
    for (int k = 1; k <= k_max; ++k) {
        auto gen = rng::stream(seed, static_cast<std::uint64_t>(k));
        const cd zp(amplitude * gen.uniform(-1.0, 1.0),
                    amplitude * gen.uniform(-1.0, 1.0));
        f.set_coeff(k, zp);
        if (real_field) {
            f.set_coeff(-k, std::conj(zp));
        } else {
            const cd zm(amplitude * gen.uniform(-1.0, 1.0),
                        amplitude * gen.uniform(-1.0, 1.0));
            f.set_coeff(-k, zm);
        }
    }
    return f;
}

SpectralField make_initial_data(const GridSpec& grid, const EquationSpec& eq,
                                const Config& cfg, std::uint64_t seed) {
    const std::string family = cfg.get_string("data.family");
    const bool real_field = eq.real_states();
    if (family == "soliton") {
        if (!eq.is_mkdv() || eq.mu != 1.0)
            throw std::invalid_argument(
                "data.family soliton: travelling wave solves focusing mKdV "
                "(mu = +1) only");
        return soliton(grid, cfg.get_real("data.c", 1.0));
    }
    if (family == "sech")
        return sech_profile(grid, cfg.get_real("data.A", 1.0),
                            cfg.get_real("data.w", 1.0), real_field);
    if (family == "plane_wave") {
        if (real_field)
            throw std::invalid_argument(
                "data.family plane_wave: complex exponential is not real "
                "mKdV data");
        return plane_wave(grid, cfg.get_real("data.A", 1.0),
                          static_cast<int>(cfg.get_int("data.k", 1)));
    }
    if (family == "poisson_kernel")
        return poisson_kernel(grid, cfg.get_real("data.sigma0"),
                              cfg.get_real("data.A", 1.0));
    if (family == "random_band")
        return random_band(grid, static_cast<int>(cfg.get_int("data.k_max")),
                           cfg.get_real("data.A", 1.0), real_field, seed);
    throw std::invalid_argument("data.family: unknown family '" + family +
                                "'");
}

}  // namespace gvl::data

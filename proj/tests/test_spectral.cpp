#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "gevreylab/field.hpp"
#include "gevreylab/rng.hpp"
#include "gevreylab/spectral.hpp"

using namespace gvl;
namespace sp = gvl::spectral;
using std::numbers::pi;

namespace {

SpectralField random_field(const GridSpec& g, int band, std::uint64_t seed,
                           bool real_field) {
    SpectralField f = SpectralField::zero(g, real_field);
    for (int k = 1; k <= band; ++k) {
        auto gen = rng::stream(seed, k);
        const cd z(gen.uniform(-1.0, 1.0), gen.uniform(-1.0, 1.0));
        f.set_coeff(k, z);
        f.set_coeff(-k, real_field
                            ? std::conj(z)
                            : cd(gen.uniform(-1.0, 1.0), gen.uniform(-1.0, 1.0)));
    }
    return f;
}

}  // namespace

TEST_SUITE_BEGIN("spectral");

TEST_CASE("grid construction and mode set") {
    const GridSpec g = GridSpec::make(8, 2 * pi);
    std::vector<int> modes;
    for (int i = 0; i < g.n; ++i) modes.push_back(g.mode_of_index(i));
    std::sort(modes.begin(), modes.end());
    CHECK(modes.front() == -4);
    CHECK(modes.back() == 3);
    CHECK(g.xi_of_mode(1) == doctest::Approx(1.0));

    const GridSpec g2 = GridSpec::make(8, 4 * pi);
    CHECK(g2.xi_of_mode(1) == doctest::Approx(0.5));

    CHECK_THROWS_AS(GridSpec::make(7, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec::make(4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec::make(64, -1.0), std::invalid_argument);
}

TEST_CASE("transform of cos(x) puts 1/2 at modes +-1") {
    const GridSpec g = GridSpec::make(64, 2 * pi);
    std::vector<double> samples(g.n);
    for (int j = 0; j < g.n; ++j) samples[j] = std::cos(g.x(j));
    const SpectralField f = to_spectral(g, std::span<const double>(samples));
    CHECK(std::abs(f.coeff(1) - cd(0.5, 0.0)) < 1e-14);
    CHECK(std::abs(f.coeff(-1) - cd(0.5, 0.0)) < 1e-14);
    double rest = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const int k = g.mode_of_index(i);
        if (k != 1 && k != -1) rest = std::max(rest, std::abs(f.coeffs()[i]));
    }
    CHECK(rest < 1e-14);
    CHECK(f.reality_defect() < 1e-12);
}

TEST_CASE("round trip is the identity across grid sizes") {
    for (int n : {8, 32, 128, 1024}) {
        const GridSpec g = GridSpec::make(n, 3.7);
        std::vector<cd> samples(n);
        auto gen = rng::stream(2024, n);
        for (auto& z : samples)
            z = cd(gen.uniform(-1.0, 1.0), gen.uniform(-1.0, 1.0));
        const auto back =
            to_physical(to_spectral(g, std::span<const cd>(samples)));
        double err = 0, scale = 0;
        for (int j = 0; j < n; ++j) {
            err = std::max(err, std::abs(back[j] - samples[j]));
            scale = std::max(scale, std::abs(samples[j]));
        }
        CHECK(err < 1e-12 * scale);
    }
    const GridSpec g = GridSpec::make(16, 1.0);
    std::vector<cd> wrong(8);
    CHECK_THROWS_AS(to_spectral(g, std::span<const cd>(wrong)),
                    std::invalid_argument);
}

TEST_CASE("all-zero samples give all-zero coefficients") {
    const GridSpec g = GridSpec::make(32, 5.0);
    std::vector<cd> zero(g.n, cd(0, 0));
    const auto f = to_spectral(g, std::span<const cd>(zero));
    for (const auto& c : f.coeffs()) CHECK(std::abs(c) == 0.0);
}

TEST_CASE("derivatives of single modes") {
    const GridSpec g = GridSpec::make(64, 2 * pi);
    std::vector<double> sinx(g.n), cosx(g.n);
    for (int j = 0; j < g.n; ++j) {
        sinx[j] = std::sin(g.x(j));
        cosx[j] = std::cos(g.x(j));
    }
    const auto f = to_spectral(g, std::span<const double>(sinx));

    const auto d1 = to_physical(sp::apply_derivative(f, 1));
    const auto d3 = to_physical(sp::apply_derivative(f, 3));
    for (int j = 0; j < g.n; ++j) {
        CHECK(std::abs(d1[j] - cosx[j]) < 1e-12);
        // xi^3 amplifies transform round-off at the top modes
        CHECK(std::abs(d3[j] + cosx[j]) < 1e-11);
    }

    SpectralField constant = SpectralField::zero(g, true);
    constant.set_coeff(0, cd(2.5, 0.0));
    for (int order : {1, 2, 3}) {
        const auto d = sp::apply_derivative(constant, order);
        for (const auto& c : d.coeffs()) CHECK(std::abs(c) == 0.0);
    }
    CHECK_THROWS_AS(sp::apply_derivative(f, 4), std::invalid_argument);
}

TEST_CASE("gevrey multiplier: identity, single mode, semigroup") {
    const GridSpec g = GridSpec::make(64, 2 * pi);
    const auto f = random_field(g, 12, 77, false);

    const auto id = sp::apply_gevrey(f, 0.0);
    for (int i = 0; i < g.n; ++i) CHECK(id.coeffs()[i] == f.coeffs()[i]);

    SpectralField mode2 = SpectralField::zero(g, false);
    mode2.set_coeff(2, cd(1.0, 0.0));
    const auto amp = sp::apply_gevrey(mode2, 0.5);
    CHECK(std::abs(amp.coeff(2) - cd(std::exp(1.0), 0.0)) < 1e-14);

    const auto two_step = sp::apply_gevrey(sp::apply_gevrey(f, 0.07), 0.05);
    const auto one_step = sp::apply_gevrey(f, 0.12);
    for (int i = 0; i < g.n; ++i)
        CHECK(std::abs(two_step.coeffs()[i] - one_step.coeffs()[i]) <=
              1e-12 * std::abs(one_step.coeffs()[i]) + 1e-300);
}

TEST_CASE("gevrey overflow guard") {
    const GridSpec g = GridSpec::make(64, 2 * pi);  // xi_max = 32
    const auto f = random_field(g, 5, 3, false);
    CHECK_THROWS_AS(sp::apply_gevrey(f, 20.0), sp::trust_radius_error);
    CHECK_THROWS_AS(sp::gevrey_norm(f, {20.0, 0.0}), sp::trust_radius_error);
    CHECK_NOTHROW(sp::apply_gevrey(f, 18.0));  // 18*32 = 576 < 600
}

TEST_CASE("dealias: projection onto |k| <= n/4") {
    const GridSpec g = GridSpec::make(32, 2 * pi);
    const auto f = random_field(g, 6, 5, false);  // support inside n/4 = 8
    const auto once = sp::dealias(f);
    for (int i = 0; i < g.n; ++i) CHECK(once.coeffs()[i] == f.coeffs()[i]);

    SpectralField top = SpectralField::zero(g, false);
    top.set_coeff(g.n / 2 - 1, cd(1.0, 0.0));
    const auto cut = sp::dealias(top);
    for (const auto& c : cut.coeffs()) CHECK(std::abs(c) == 0.0);

    const auto wide = random_field(g, 15, 9, false);
    const auto d1 = sp::dealias(wide);
    const auto d2 = sp::dealias(d1);
    for (int i = 0; i < g.n; ++i) CHECK(d1.coeffs()[i] == d2.coeffs()[i]);
    CHECK(sp::l2_norm(d1) <= sp::l2_norm(wide));
}

TEST_CASE("gevrey norm of a single mode") {
    // e^{ix} on L = 2pi: weight <1>^s e^{sigma} times the box factor
    // sqrt(L) from the Plancherel convention.
    const GridSpec g = GridSpec::make(64, 2 * pi);
    SpectralField f = SpectralField::zero(g, false);
    f.set_coeff(1, cd(1.0, 0.0));
    for (const auto& [sg, s] : std::vector<std::pair<double, double>>{
             {0.0, 0.0}, {0.3, 1.0}, {0.2, -0.5}}) {
        const double expected =
            std::sqrt(2 * pi) * std::pow(2.0, s) * std::exp(sg);
        CHECK(sp::gevrey_norm(f, {sg, s}) ==
              doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("Parseval: sigma = s = 0 norm equals the physical L2 norm") {
    const GridSpec g = GridSpec::make(128, 4 * pi);
    const auto f = random_field(g, 40, 13, false);
    const auto phys = to_physical(f);
    double quad = 0.0;
    for (const auto& z : phys) quad += std::norm(z);
    quad = std::sqrt(quad * g.dx());
    CHECK(sp::gevrey_norm(f, {0.0, 0.0}) ==
          doctest::Approx(quad).epsilon(1e-12));
    CHECK(sp::l2_norm(f) == doctest::Approx(quad).epsilon(1e-12));
}

TEST_CASE("gevrey norm against direct summation oracle") {
    const GridSpec g = GridSpec::make(128, 2 * pi);
    SpectralField f = SpectralField::zero(g, false);
    for (int i = 0; i < g.n; ++i) {
        const double xi = g.xi_of_index(i);
        f.coeffs()[i] = cd(std::exp(-0.3 * std::abs(xi)), 0.0);
    }
    const sp::GevreyParams p{0.2, 0.0};
    double acc = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const double xi = g.xi_of_index(i);
        acc += std::exp(2.0 * 0.2 * std::abs(xi)) * std::norm(f.coeffs()[i]);
    }
    const double oracle = std::sqrt(g.length * acc);
    CHECK(std::isfinite(oracle));
    CHECK(sp::gevrey_norm(f, p) == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("gevrey norm monotone in sigma and in s") {
    const GridSpec g = GridSpec::make(64, 2 * pi);
    const auto f = random_field(g, 20, 21, false);
    double prev = 0.0;
    for (double sg : {0.0, 0.05, 0.1, 0.2}) {
        const double v = sp::gevrey_norm(f, {sg, 0.5});
        CHECK(v >= prev);
        prev = v;
    }
    prev = 0.0;
    for (double s : {-1.0, 0.0, 0.5, 1.0, 2.0}) {
        const double v = sp::gevrey_norm(f, {0.1, s});
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("embedding constant from the symbol-wise weight ratio") {
    const GridSpec g = GridSpec::make(128, 2 * pi);
    const double sigma = 0.2, sigma_p = 0.1, s = 1.0, s_p = 2.0;
    double max_ratio = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const double axi = std::abs(g.xi_of_index(i));
        const double num = std::pow(1 + axi, s_p) * std::exp(sigma_p * axi);
        const double den = std::pow(1 + axi, s) * std::exp(sigma * axi);
        max_ratio = std::max(max_ratio, num / den);
    }
    CHECK(std::isfinite(max_ratio));
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const auto f = random_field(g, 50, seed, false);
        CHECK(sp::gevrey_norm(f, {sigma_p, s_p}) <=
              max_ratio * sp::gevrey_norm(f, {sigma, s}) * (1 + 1e-12));
    }
}

TEST_CASE("lp norms") {
    const GridSpec g = GridSpec::make(128, 2 * pi);
    SpectralField one = SpectralField::zero(g, true);
    one.set_coeff(0, cd(1.0, 0.0));
    CHECK(sp::lp_norm(one, 4) ==
          doctest::Approx(std::pow(2 * pi, 0.25)).epsilon(1e-12));
    CHECK(sp::lp_norm(SpectralField::zero(g, false), 4) == 0.0);
    CHECK_THROWS_AS(sp::lp_norm(one, 3), std::invalid_argument);

    // sech profile against a refined quadrature oracle
    const GridSpec fine = GridSpec::make(1024, 16 * pi);
    std::vector<double> samples(fine.n);
    for (int j = 0; j < fine.n; ++j)
        samples[j] = 1.0 / std::cosh(fine.x(j) - 8 * pi);
    const auto f = to_spectral(fine, std::span<const double>(samples));
    const int refine = 8;
    double quad = 0.0;
    const double h = fine.length / (fine.n * refine);
    for (int j = 0; j < fine.n * refine; ++j) {
        const double u = 1.0 / std::cosh(j * h - 8 * pi);
        quad += std::pow(u, 4) * h;
    }
    CHECK(sp::lp_norm(f, 4) ==
          doctest::Approx(std::pow(quad, 0.25)).epsilon(1e-8));
}

TEST_CASE("trust flag for amplified round-off") {
    const GridSpec g = GridSpec::make(256, 2 * pi);  // xi_max = 128
    // a Gaussian bump decays below the transform round-off floor well
    // inside the grid; beyond that the modes are pure noise, which the
    // exponential weight amplifies at large sigma
    std::vector<double> samples(g.n);
    for (int j = 0; j < g.n; ++j) {
        const double d = g.x(j) - pi;
        samples[j] = std::exp(-d * d / (2 * 0.25 * 0.25));
    }
    const auto f = to_spectral(g, std::span<const double>(samples));
    const auto ok = sp::gevrey_norm_checked(f, {0.05, 0.0});
    CHECK(ok.trusted);
    const auto bad = sp::gevrey_norm_checked(f, {0.4, 0.0});
    CHECK_FALSE(bad.trusted);

    // dealiasing zeroes the top band exactly, restoring trust
    const auto cut = sp::dealias(f);
    CHECK(sp::gevrey_norm_checked(cut, {0.4, 0.0}).trusted);
}

TEST_SUITE_END();

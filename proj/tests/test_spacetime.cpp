#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "gevreylab/rng.hpp"
#include "gevreylab/spacetime.hpp"

using namespace gvl;
namespace st = gvl::spacetime;
using std::numbers::pi;

namespace {

// O((nm)^2) two-dimensional DFT, independent of the FFT path.
double xsb_oracle(const st::SpaceTimeField& f, double s, double b,
                  const EquationSpec& eq) {
    const int n = f.grid.n, m = f.m;
    double acc = 0.0;
    for (int r = 0; r < m; ++r) {
        const double tau = f.tau_of_index(r);
        for (int k = 0; k < n; ++k) {
            const double xi = f.grid.xi_of_index(k);
            cd hat(0.0, 0.0);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j) {
                    const double ph = -(2.0 * pi * k * j / n +
                                        2.0 * pi * r * i / m);
                    hat += f.window[i] * f.at(i, j) *
                           cd(std::cos(ph), std::sin(ph));
                }
            hat /= static_cast<double>(n) * m;
            const double w = std::pow(1.0 + std::abs(xi), 2.0 * s) *
                             std::pow(1.0 + std::abs(tau - eq.phase(xi)), 2.0 * b);
            acc += w * std::norm(hat);
        }
    }
    return std::sqrt(f.grid.length * f.duration() * acc);
}

void fill_mode(st::SpaceTimeField& f, int k, int r, cd amp) {
    const double xi = f.grid.xi_of_mode(k);
    const double tau = 2.0 * pi * r / f.duration();
    for (int i = 0; i < f.m; ++i)
        for (int j = 0; j < f.grid.n; ++j) {
            const double ph = xi * f.grid.x(j) + tau * f.t(i);
            f.at(i, j) += amp * cd(std::cos(ph), std::sin(ph));
        }
}

}  // namespace

TEST_SUITE_BEGIN("spacetime");

TEST_CASE("zero field has zero norm; preconditions enforced") {
    const GridSpec g = GridSpec::make(16, 2 * pi);
    auto f = st::make_spacetime(g, 0.0, 0.1, 16, st::TimeWindow::boxcar);
    const EquationSpec eq = EquationSpec::mkdv(-1.0);
    CHECK(st::xsb_norm(f, 0.25, 0.6, eq) == 0.0);
    CHECK_THROWS_AS(st::xsb_norm(f, 0.0, 1.5, eq), std::invalid_argument);
    CHECK_THROWS_AS(st::make_spacetime(g, 0.0, 0.1, 4), std::invalid_argument);
}

TEST_CASE("single space-time mode with boxcar window") {
    const GridSpec g = GridSpec::make(16, 2 * pi);
    const EquationSpec eq = EquationSpec::mkdv(-1.0);
    auto f = st::make_spacetime(g, 0.0, 2 * pi / 16, 16, st::TimeWindow::boxcar);
    // off-characteristic mode: k = 2 (phase 8), tau index r = 3 (tau = 3)
    fill_mode(f, 2, 3, cd(1.0, 0.0));
    const double s = 0.25, b = 0.6;
    const double expected = std::sqrt(g.length * f.duration()) *
                            std::pow(1.0 + 2.0, s) *
                            std::pow(1.0 + std::abs(3.0 - 8.0), b);
    CHECK(st::xsb_norm(f, s, b, eq) ==
          doctest::Approx(expected).epsilon(1e-10));
    CHECK(st::xsb_norm(f, s, b, eq) ==
          doctest::Approx(xsb_oracle(f, s, b, eq)).epsilon(1e-10));
}

TEST_CASE("mode riding the characteristic carries weight one in b") {
    const GridSpec g = GridSpec::make(16, 2 * pi);
    const EquationSpec eq = EquationSpec::mkdv(-1.0);
    // k = 1: phase(1) = 1; duration 2 pi makes tau_r = r, so r = 1 sits
    // exactly on the characteristic.
    auto f = st::make_spacetime(g, 0.0, 2 * pi / 16, 16, st::TimeWindow::boxcar);
    fill_mode(f, 1, 1, cd(1.0, 0.0));
    const double v_small_b = st::xsb_norm(f, 0.0, 0.51, eq);
    const double v_large_b = st::xsb_norm(f, 0.0, 0.9, eq);
    CHECK(v_small_b == doctest::Approx(v_large_b).epsilon(1e-12));
    CHECK(v_small_b ==
          doctest::Approx(std::sqrt(g.length * f.duration())).epsilon(1e-12));
}

TEST_CASE("random field against the direct-summation oracle") {
    const GridSpec g = GridSpec::make(8, 4 * pi);
    const EquationSpec eq = EquationSpec::tnls(1.0, 0.5, 1.0);
    auto f = st::make_spacetime(g, 0.0, 0.3, 8, st::TimeWindow::hann);
    auto gen = rng::stream(17, 0);
    for (auto& z : f.values) z = cd(gen.uniform(-1.0, 1.0), gen.uniform(-1.0, 1.0));
    for (const auto& [s, b] : std::vector<std::pair<double, double>>{
             {-0.2, 0.6}, {0.0, 0.51}, {0.25, -0.4}}) {
        CHECK(st::xsb_norm(f, s, b, eq) ==
              doctest::Approx(xsb_oracle(f, s, b, eq)).epsilon(1e-10));
    }
}

TEST_CASE("spacetime L2 norm matches Plancherel route") {
    const GridSpec g = GridSpec::make(16, 2 * pi);
    const EquationSpec eq = EquationSpec::mkdv(-1.0);
    auto f = st::make_spacetime(g, 0.0, 0.2, 16, st::TimeWindow::boxcar);
    auto gen = rng::stream(19, 0);
    for (auto& z : f.values) z = cd(gen.uniform(-1.0, 1.0), gen.uniform(-1.0, 1.0));
    // with s = b = 0 and boxcar window the weighted sum is the L2 norm
    CHECK(st::xsb_norm(f, 0.0, 0.0, eq) ==
          doctest::Approx(st::l2_norm(f)).epsilon(1e-12));
}

TEST_CASE("pointwise triple product") {
    const GridSpec g = GridSpec::make(16, 2 * pi);
    auto a = st::make_spacetime(g, 0.0, 0.1, 8, st::TimeWindow::boxcar);
    auto b = a, c = a;
    auto gen = rng::stream(23, 0);
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        a.values[i] = cd(gen.uniform(-1, 1), gen.uniform(-1, 1));
        b.values[i] = cd(gen.uniform(-1, 1), gen.uniform(-1, 1));
        c.values[i] = cd(gen.uniform(-1, 1), gen.uniform(-1, 1));
    }
    const auto p = st::pointwise_triple(a, b, c, false);
    const auto pc = st::pointwise_triple(a, b, c, true);
    for (std::size_t i = 0; i < p.values.size(); ++i) {
        CHECK(std::abs(p.values[i] - a.values[i] * b.values[i] * c.values[i]) <
              1e-14);
        CHECK(std::abs(pc.values[i] -
                       a.values[i] * b.values[i] * std::conj(c.values[i])) <
              1e-14);
    }
}

TEST_SUITE_END();

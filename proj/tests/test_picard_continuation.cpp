#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gevreylab/continuation.hpp"
#include "gevreylab/initial_data.hpp"
#include "gevreylab/picard.hpp"
#include "gevreylab/spectral.hpp"
#include "gevreylab/stepper.hpp"

using namespace gvl;
namespace dyn = gvl::dynamics;
using std::numbers::pi;

namespace {

double field_distance(const SpectralField& a, const SpectralField& b) {
    double acc = 0.0;
    for (int i = 0; i < a.n(); ++i)
        acc += std::norm(a.coeffs()[i] - b.coeffs()[i]);
    return std::sqrt(a.grid().length * acc);
}

double spectral_distance(const std::vector<cd>& a, const SpectralField& b) {
    double acc = 0.0;
    for (int i = 0; i < b.n(); ++i) acc += std::norm(a[i] - b.coeffs()[i]);
    return std::sqrt(b.grid().length * acc);
}

}  // namespace

TEST_SUITE_BEGIN("picard");

TEST_CASE("zero data stays zero") {
    const GridSpec g = GridSpec::make(64, 2 * pi);
    const EquationSpec eq = EquationSpec::mkdv(-1.0);
    const auto res =
        dyn::picard_solve(SpectralField::zero(g, true), eq, 0.1, 4, 17);
    for (const auto& z : res.field.values) CHECK(std::abs(z) == 0.0);
    for (double d : res.iterate_deltas) CHECK(d == 0.0);
}

TEST_CASE("small data: cubic deviation from the free flow") {
    const GridSpec g = GridSpec::make(128, 8 * pi);
    const EquationSpec eq = EquationSpec::mkdv(-1.0);
    const auto shape = data::sech_profile(g, 1.0, 1.0, true);
    const double T = 0.05;
    const int m = 33;

    auto deviation = [&](double eps) {
        SpectralField u0 = shape;
        for (auto& c : u0.coeffs()) c *= eps;
        const auto res = dyn::picard_solve(u0, eq, T, 6, m);
        double worst = 0.0;
        for (int i = 0; i < m; ++i) {
            const auto lin = dyn::linear_propagate(u0, eq, res.field.t(i));
            worst = std::max(worst, spectral_distance(res.spectral[i], lin));
        }
        return worst;
    };
    const double e2 = deviation(1e-2);
    const double e3 = deviation(1e-3);
    const double slope = std::log(e2 / e3) / std::log(10.0);
    CHECK(slope > 2.8);
    CHECK(slope < 3.2);
}

TEST_CASE("iterates contract geometrically below the lifespan") {
    const GridSpec g = GridSpec::make(128, 8 * pi);
    const EquationSpec eq = EquationSpec::mkdv(-1.0);
    const auto u0 = data::sech_profile(g, 0.8, 1.0, true);
    const auto res = dyn::picard_solve(u0, eq, 0.05, 7, 33);
    REQUIRE(res.iterate_deltas.size() == 7);
    for (std::size_t i = 2; i + 1 < res.iterate_deltas.size(); ++i) {
        if (res.iterate_deltas[i + 1] < 1e-14) break;  // converged to floor
        CHECK(res.iterate_deltas[i + 1] < 0.8 * res.iterate_deltas[i]);
    }
}

TEST_CASE("picard agrees with the stepper on smooth mkdv data") {
    const GridSpec g = GridSpec::make(128, 8 * pi);
    const EquationSpec eq = EquationSpec::mkdv(1.0);
    const auto u0 = data::sech_profile(g, 0.7, 1.0, true);
    const double T = 0.1;
    const auto res = dyn::picard_solve(u0, eq, T, 10, 41);

    dyn::IntegratorConfig cfg;
    cfg.dt = 1e-4;
    const auto stepped = dyn::integrate(u0, eq, cfg, std::lround(T / cfg.dt));
    CHECK(spectral_distance(res.spectral.back(), stepped) < 1e-6);
}

TEST_CASE("divergence outside the contraction regime is reported") {
    const GridSpec g = GridSpec::make(64, 2 * pi);
    const EquationSpec eq = EquationSpec::mkdv(1.0);
    const auto u0 = data::sech_profile(g, 8.0, 0.4, true);
    CHECK_THROWS_WITH_AS(dyn::picard_solve(u0, eq, 2.0, 8, 33),
                         doctest::Contains("outside contraction regime"),
                         std::runtime_error);
}

TEST_CASE("lifespan formula") {
    dyn::LifespanParams p;  // c0 = 0.1, a = 3
    CHECK(dyn::lifespan(0.0, p) == doctest::Approx(0.1));
    CHECK(dyn::lifespan(1.0, p) == doctest::Approx(0.0125));
    double prev = dyn::lifespan(0.0, p);
    for (double norm : {0.2, 0.5, 1.0, 2.0, 5.0}) {
        const double t = dyn::lifespan(norm, p);
        CHECK(t < prev);
        prev = t;
    }
    CHECK_THROWS_AS(dyn::lifespan(-1.0, p), std::invalid_argument);
}

TEST_CASE("continuation refuses focusing mkdv") {
    const GridSpec g = GridSpec::make(64, 8 * pi);
    const auto u0 = data::sech_profile(g, 0.5, 1.0, true);
    dyn::ContinuationParams cp;
    cp.sigma0 = 0.1;
    dyn::IntegratorConfig cfg;
    cfg.dt = 1e-3;
    CHECK_THROWS_AS(dyn::continuation_run(u0, EquationSpec::mkdv(1.0), cp, 1.0,
                                          cfg),
                    std::invalid_argument);
}

TEST_CASE("single window when T <= rho") {
    const GridSpec g = GridSpec::make(128, 8 * pi);
    const EquationSpec eq = EquationSpec::mkdv(-1.0);
    const auto u0 = data::sech_profile(g, 0.3, 1.0, true);
    dyn::ContinuationParams cp;
    cp.sigma0 = 0.2;
    dyn::IntegratorConfig cfg;
    cfg.dt = 1e-4;

    // rho for this data is well above 1e-3
    const double T = 1e-3;
    const auto res = dyn::continuation_run(u0, eq, cp, T, cfg);
    REQUIRE(res.schedule.size() == 1);
    CHECK(res.schedule[0].t == doctest::Approx(T));
    CHECK(res.schedule[0].sigma == cp.sigma0);
    CHECK(res.status == "completed");
}

TEST_CASE("zero drift keeps sigma at sigma0") {
    const GridSpec g = GridSpec::make(128, 8 * pi);
    const EquationSpec free_eq = EquationSpec::tnls(1.0, 1.0, 0.0);
    const auto v0 = data::sech_profile(g, 0.5, 1.0, false);
    dyn::ContinuationParams cp;
    cp.sigma0 = 0.3;
    dyn::IntegratorConfig cfg;
    cfg.dt = 1e-3;
    const auto res = dyn::continuation_run(v0, free_eq, cp, 2.0, cfg);
    CHECK(res.schedule.size() > 3);
    for (const auto& p : res.schedule) CHECK(p.sigma == cp.sigma0);
}

TEST_CASE("sigma floor stops the run with partial results") {
    const GridSpec g = GridSpec::make(128, 8 * pi);
    const EquationSpec eq = EquationSpec::mkdv(-1.0);
    const auto u0 = data::sech_profile(g, 0.9, 0.8, true);
    dyn::ContinuationParams cp;
    cp.sigma0 = 0.3;
    cp.C = 50.0;             // huge budget constant forces early reductions
    cp.sigma_min = 0.25;     // floor just below sigma0
    dyn::IntegratorConfig cfg;
    cfg.dt = 1e-3;
    const auto res = dyn::continuation_run(u0, eq, cp, 5.0, cfg);
    CHECK(res.status != "completed");
    CHECK(res.reached_time < 5.0);
}

TEST_SUITE_END();

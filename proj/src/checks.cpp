#include "gevreylab/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gevreylab/fft.hpp"
#include "gevreylab/rng.hpp"
#include "gevreylab/spacetime.hpp"

namespace gvl::lab {

namespace {
inline double bracket(double x) { return 1.0 + std::abs(x); }
}

ExpLemmaReport check_exp_lemma(long samples, std::uint64_t seed) {
    ExpLemmaReport rep;
    rep.samples = samples;
    rep.seed = seed;
    double max_log = -std::numeric_limits<double>::infinity();
    for (long i = 0; i < samples; ++i) {
        auto g = rng::stream(seed, static_cast<std::uint64_t>(i));
        const double a = g.uniform(-50.0, 50.0);
        const double b = g.uniform(-50.0, 50.0);
        const double c = g.uniform(-50.0, 50.0);
        const double sg = 5.0 * (1.0 - g.uniform());  // (0, 5]
        const double th = g.uniform();                // [0, 1)

        const double sum3 = std::abs(a) + std::abs(b) + std::abs(c);
        const double d = std::max(0.0, sum3 - std::abs(a + b + c));
        const double mpair =
            std::min({std::abs(a) + std::abs(b), std::abs(a) + std::abs(c),
                      std::abs(b) + std::abs(c)});
        if (d > 0.0 && mpair > 0.0) {
            // log of (1 - e^{-sigma d}) minus log of (2 sigma m)^theta;
            // the common e^{sigma sum3} factor cancels.
            const double lhs_log = std::log(-std::expm1(-sg * d));
            const double rhs_log = th * std::log(2.0 * sg * mpair);
            const double r = lhs_log - rhs_log;
            max_log = std::max(max_log, r);
            if (r > 0.0) ++rep.violations;
        }

        // companion bound: min{...} <= 3 <a-b-c><c><b> / <a>
        const double lhs34 =
            std::min({std::abs(a - b - c) + std::abs(b),
                      std::abs(a - b - c) + std::abs(c),
                      std::abs(b) + std::abs(c)});
        const double rhs34 =
            3.0 * bracket(a - b - c) * bracket(c) * bracket(b) / bracket(a);
        const double r34 = lhs34 / rhs34;
        rep.max_ratio_34 = std::max(rep.max_ratio_34, r34);
        if (r34 > 1.0 + 1e-12) ++rep.violations_34;
    }
    rep.max_ratio = std::isfinite(max_log) ? std::exp(max_log) : 0.0;
    return rep;
}

XimedReport check_ximed(long samples, std::uint64_t seed) {
    XimedReport rep;
    rep.samples = samples;
    rep.seed = seed;
    for (long i = 0; i < samples; ++i) {
        auto g = rng::stream(seed, static_cast<std::uint64_t>(i));
        const double x1 = g.uniform(-50.0, 50.0);
        const double x2 = g.uniform(-50.0, 50.0);
        const double x3 = g.uniform(-50.0, 50.0);
        const double a1 = std::abs(x1), a2 = std::abs(x2), a3 = std::abs(x3);
        const double d = a1 + a2 + a3 - std::abs(x1 + x2 + x3);
        const double med =
            std::max(std::min(a1, a2), std::min(std::max(a1, a2), a3));
        if (med <= 0.0) continue;  // then d = 0 as well
        const double r = d / med;
        rep.max_ratio = std::max(rep.max_ratio, r);
        if (r > 12.0 + 1e-12) ++rep.violations;
    }
    return rep;
}

double kernel_K(double xi, double tau, double xi1, double tau1, double xi2,
                double tau2, double s, double b, double bp,
                const EquationSpec& eq) {
    const double num = std::pow(bracket(xi), s) *
                       std::pow(bracket(xi + xi1 - xi2), -s) *
                       std::pow(bracket(xi2), -s) * std::pow(bracket(xi1), -s);
    const double den =
        std::pow(bracket(tau - eq.phase(xi)), -bp) *
        std::pow(bracket(tau + tau1 - tau2 - eq.phase(xi + xi1 - xi2)), b) *
        std::pow(bracket(tau1 - eq.phase(xi1)), b) *
        std::pow(bracket(tau2 - eq.phase(xi2)), b);
    return num / den;
}

namespace {

// Two-sided density on [-R, R] proportional to (1 + |x|)^{-q}, q > 1.
struct TailProposal {
    double q, R, z_half, norm;
    TailProposal(double q_, double R_) : q(q_), R(R_) {
        z_half = (1.0 - std::pow(1.0 + R, 1.0 - q)) / (q - 1.0);
        norm = 1.0 / (2.0 * z_half);
    }
    double sample(double u) const {
        const double sign = u < 0.5 ? -1.0 : 1.0;
        const double v = u < 0.5 ? 2.0 * u : 2.0 * u - 1.0;
        const double x =
            std::pow(1.0 - v * (1.0 - std::pow(1.0 + R, 1.0 - q)), 1.0 / (1.0 - q)) -
            1.0;
        return sign * x;
    }
    double density(double x) const {
        return norm * std::pow(1.0 + std::abs(x), -q);
    }
    // untruncated mass beyond the box
    double tail_mass() const { return std::pow(1.0 + R, 1.0 - q); }
};

}  // namespace

McEstimate kernel_I(double xi, double tau, double s, double b, double bp,
                    const EquationSpec& eq, const McConfig& mc) {
    if (!eq.is_mkdv() && eq.kind != EquationSpec::Kind::tnls)
        throw std::invalid_argument("kernel_I: unknown equation");
    if (eq.is_mkdv())
        throw std::invalid_argument("kernel_I: requires the tNLS phase");
    if (!(s > -0.25 && s <= 0.0))
        throw std::invalid_argument("kernel_I: hypothesis requires -1/4 < s <= 0");
    if (!(b > 7.0 / 12.0))
        throw std::invalid_argument("kernel_I: hypothesis requires b > 7/12");
    if (!(bp < s / 3.0))
        throw std::invalid_argument("kernel_I: hypothesis requires bp < s/3");
    if (mc.samples < 10000)
        throw std::invalid_argument("kernel_I: need at least 1e4 samples");
    if (!(mc.proposal_tail > 1.0))
        throw std::invalid_argument("kernel_I: proposal tail must exceed 1");

    const TailProposal qxi(mc.proposal_tail, mc.truncation);
    const TailProposal qtau(2.0 * b, mc.truncation);

    double sum = 0.0, sum_sq = 0.0, edge_sum = 0.0;
    const double edge = 0.1 * mc.truncation;
    for (long i = 0; i < mc.samples; ++i) {
        auto g = rng::stream(mc.seed, static_cast<std::uint64_t>(i));
        const double x1 = qxi.sample(g.uniform());
        const double x2 = qxi.sample(g.uniform());
        const double y1 = qtau.sample(g.uniform());
        const double y2 = qtau.sample(g.uniform());
        const double t1 = eq.phase(x1) + y1;
        const double t2 = eq.phase(x2) + y2;
        const double K = kernel_K(xi, tau, x1, t1, x2, t2, s, b, bp, eq);
        const double q = qxi.density(x1) * qxi.density(x2) *
                         qtau.density(y1) * qtau.density(y2);
        const double w = K * K / q;
        sum += w;
        sum_sq += w * w;
        if (std::max({std::abs(x1), std::abs(x2), std::abs(y1),
                      std::abs(y2)}) > edge)
            edge_sum += w;
    }
    const double n = static_cast<double>(mc.samples);
    McEstimate est;
    est.value = sum / n;
    const double var = std::max(0.0, (sum_sq - sum * sum / n) / (n - 1.0));
    est.stderr_ = std::sqrt(var / n);
    est.samples_used = mc.samples;
    est.seed = mc.seed;
    est.converged = est.value > 0.0 && est.stderr_ / est.value <= 0.2;
    const double txi = qxi.tail_mass(), ttau = qtau.tail_mass();
    est.proposal_tail_mass =
        1.0 - (1.0 - txi) * (1.0 - txi) * (1.0 - ttau) * (1.0 - ttau);
    est.edge_fraction = sum > 0.0 ? edge_sum / sum : 0.0;
    return est;
}

namespace {

// Band-limited random field whose spectrum rides the characteristic
// tau = phase(xi) with a Gaussian profile plus a uniform noise floor.
// Draws are keyed by (seed, trial, k, r) so the same physical mode gets the
// same amplitude at every grid refinement.
spacetime::SpaceTimeField random_characteristic_field(
    const RatioConfig& rc, const EquationSpec& eq, std::uint64_t field_index) {
    const GridSpec& g = rc.grid;
    const double t_span = rc.t_span > 0.0 ? rc.t_span : 0.5 * g.length;
    const int band = rc.band_modes > 0 ? rc.band_modes : g.n / 8;
    const int tau_band = rc.tau_band > 0 ? rc.tau_band : rc.m / 4;

    auto f = spacetime::make_spacetime(g, 0.0, t_span / rc.m, rc.m,
                                       spacetime::TimeWindow::boxcar);
    std::vector<cd> spec(f.values.size(), cd(0.0, 0.0));
    for (int k = -band; k <= band; ++k) {
        for (int r = -tau_band; r <= tau_band; ++r) {
            if (k <= -g.n / 2 || k >= g.n / 2) continue;
            if (r <= -rc.m / 2 || r >= rc.m / 2) continue;
            const std::uint64_t key =
                (field_index << 42) ^
                (static_cast<std::uint64_t>(k + (1 << 20)) << 21) ^
                static_cast<std::uint64_t>(r + (1 << 20));
            auto gen = rng::stream(rc.seed, key);
            const double xi = g.xi_of_mode(k);
            const double tau = 2.0 * std::numbers::pi * r / t_span;
            const double d = tau - eq.phase(xi);
            const double amp =
                std::exp(-0.5 * d * d / (rc.char_width * rc.char_width)) +
                rc.off_noise;
            const cd z(gen.uniform(-1.0, 1.0), gen.uniform(-1.0, 1.0));
            const int ik = g.index_of_mode(k);
            const int ir = r >= 0 ? r : r + rc.m;
            spec[static_cast<std::size_t>(ir) * g.n + ik] = amp * z;
        }
    }
    fft::backward_2d(rc.m, g.n, spec.data(), f.values.data());
    return f;
}

}  // namespace

RatioStats trilinear_ratio(const RatioConfig& rc, double s, double b,
                           double bp, const EquationSpec& eq) {
    RatioStats stats;
    double sum = 0.0;
    for (int t = 0; t < rc.trials; ++t) {
        const auto u1 = random_characteristic_field(rc, eq, 3 * t + 0);
        const auto u2 = random_characteristic_field(rc, eq, 3 * t + 1);
        const auto u3 = random_characteristic_field(rc, eq, 3 * t + 2);
        const double d1 = spacetime::xsb_norm(u1, s, b, eq);
        const double d2 = spacetime::xsb_norm(u2, s, b, eq);
        const double d3 = spacetime::xsb_norm(u3, s, b, eq);
        if (d1 == 0.0 || d2 == 0.0 || d3 == 0.0) {
            ++stats.skipped;
            continue;
        }
        double num;
        if (eq.is_mkdv()) {
            const auto prod = spacetime::pointwise_triple(u1, u2, u3, false);
            num = spacetime::xsb_norm(prod, s, b - 1.0, eq, /*extra_dx=*/true);
        } else {
            const auto prod = spacetime::pointwise_triple(u1, u2, u3, true);
            num = spacetime::xsb_norm(prod, s, bp, eq);
        }
        const double r = num / (d1 * d2 * d3);
        stats.max_ratio = std::max(stats.max_ratio, r);
        sum += r;
        ++stats.trials;
    }
    stats.mean_ratio = stats.trials > 0 ? sum / stats.trials : 0.0;
    return stats;
}

RatioStats strichartz_ratio(const RatioConfig& rc, double b) {
    const EquationSpec eq = EquationSpec::mkdv(-1.0);
    RatioStats stats;
    double sum = 0.0;
    for (int t = 0; t < rc.trials; ++t) {
        const auto u1 = random_characteristic_field(rc, eq, 3 * t + 0);
        const auto u2 = random_characteristic_field(rc, eq, 3 * t + 1);
        const auto u3 = random_characteristic_field(rc, eq, 3 * t + 2);
        const double d1 = spacetime::xsb_norm(u1, 0.0, b, eq);
        const double d2 = spacetime::xsb_norm(u2, 0.0, b, eq);
        const double d3 = spacetime::xsb_norm(u3, 0.0, b, eq);
        if (d1 == 0.0 || d2 == 0.0 || d3 == 0.0) {
            ++stats.skipped;
            continue;
        }
        const auto prod = spacetime::pointwise_triple(u1, u2, u3, false);
        const double r = spacetime::l2_norm(prod) / (d1 * d2 * d3);
        stats.max_ratio = std::max(stats.max_ratio, r);
        sum += r;
        ++stats.trials;
    }
    stats.mean_ratio = stats.trials > 0 ? sum / stats.trials : 0.0;
    return stats;
}

}  // namespace gvl::lab

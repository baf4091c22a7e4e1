#include "gevreylab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gevreylab/fft.hpp"
#include "gevreylab/kernels.hpp"
#include "gevreylab/stepper.hpp"

namespace gvl::diag {

double mass(const SpectralField& f) {
    return f.grid().length * kernels::abs_pow_sum(f.data(), 2, f.grid().n);
}

double energy_mkdv(const SpectralField& f, double mu) {
    if (!f.is_real_field() && f.reality_defect() > 1e-10)
        throw std::invalid_argument("energy_mkdv: field is not real");
    const GridSpec& g = f.grid();
    std::vector<double> w(g.n);
    for (int i = 0; i < g.n; ++i) {
        const double xi = g.xi_of_index(i);
        w[i] = g.length * xi * xi;
    }
    w[g.index_of_mode(-g.n / 2)] = 0.0;  // derivative zeroes the unpaired mode
    const double grad_sq = kernels::weighted_abs2_sum(w.data(), f.data(), g.n);
    const auto phys = to_physical(f);
    const double quartic =
        kernels::abs_pow_sum(phys.data(), 4, phys.size()) * g.dx();
    return grad_sq - (mu / 6.0) * quartic;
}

cd tnls_momentum(const SpectralField& f) {
    // integral of v conj(v_x) = -i L sum xi |c|^2, up to round-off.
    const GridSpec& g = f.grid();
    double acc = 0.0;
    for (int i = 0; i < g.n; ++i) {
        if (g.mode_of_index(i) == -g.n / 2) continue;
        acc += g.xi_of_index(i) * std::norm(f.coeffs()[i]);
    }
    return cd(0.0, -g.length * acc);
}

CheckedValue gevrey_energy(const SpectralField& f, double sigma, double mu) {
    const SpectralField U = spectral::apply_gevrey(f, sigma);
    CheckedValue out;
    out.value = mass(U) + energy_mkdv(U, mu);
    out.trusted = spectral::weight_trusted(
        f, sigma, std::sqrt(std::abs(out.value)) + 1e-300);
    if (out.trusted && sigma > 0.0) {
        // the quartic term raises amplified round-off to the fourth power
        double xi_top = 0.0;
        for (int i = 0; i < f.grid().n; ++i)
            if (f.coeffs()[i] != cd(0.0, 0.0))
                xi_top = std::max(xi_top, std::abs(f.grid().xi_of_index(i)));
        const double noise_amp =
            std::exp(sigma * xi_top) * 1e-16 * spectral::l2_norm(f);
        const double quartic_noise =
            std::pow(noise_amp, 4) * f.grid().length / 6.0;
        out.trusted = quartic_noise <= 1e-3 * std::abs(out.value) + 1e-300;
    }
    return out;
}

CheckedValue gevrey_mass(const SpectralField& f, double sigma) {
    const SpectralField V = spectral::apply_gevrey(f, sigma);
    CheckedValue out;
    out.value = mass(V);
    out.trusted =
        spectral::weight_trusted(f, sigma, std::sqrt(out.value) + 1e-300);
    return out;
}

SpectralField commutator_residual(const SpectralField& f, double sigma,
                                  const EquationSpec& eq) {
    const GridSpec& g = f.grid();
    spectral::require_representable(g, sigma);

    const SpectralField band = spectral::dealias(f);
    const auto cube = [&](const SpectralField& w) {
        const auto phys = to_physical(w);
        std::vector<cd> prod(g.n), spec(g.n);
        if (eq.is_mkdv()) {
            for (int j = 0; j < g.n; ++j) prod[j] = phys[j] * phys[j] * phys[j];
        } else {
            kernels::cubic_tnls(prod.data(), phys.data(), g.n);
        }
        fft::forward(g.n, prod.data(), spec.data());
        const double inv = 1.0 / g.n;
        for (auto& z : spec) z *= inv;
        return spectral::dealias(
            SpectralField(g, std::move(spec), w.is_real_field()));
    };

    const SpectralField direct = cube(band);
    const SpectralField damped =
        spectral::apply_gevrey(cube(spectral::apply_gevrey(band, -sigma)), sigma);

    std::vector<cd> diff(g.n);
    for (int i = 0; i < g.n; ++i)
        diff[i] = direct.coeffs()[i] - damped.coeffs()[i];
    SpectralField residual(g, std::move(diff), f.is_real_field());

    if (eq.is_mkdv()) {
        residual = spectral::apply_derivative(residual, 1);
        for (auto& z : residual.coeffs()) z *= eq.mu / 3.0;
    } else {
        for (auto& z : residual.coeffs()) z = -z;
    }
    return residual;
}

RadiusFit estimate_radius(const SpectralField& f, double noise_floor_rel,
                          int k_min) {
    const GridSpec& g = f.grid();
    RadiusFit fit;
    const double peak = kernels::max_abs(f.data(), g.n);
    fit.noise_floor = noise_floor_rel * peak;
    if (peak == 0.0) return fit;

    std::vector<double> xs, ys;
    int klo = g.n, khi = 0;
    for (int i = 0; i < g.n; ++i) {
        const int k = g.mode_of_index(i);
        if (std::abs(k) < k_min || k == -g.n / 2) continue;
        const double a = std::abs(f.coeffs()[i]);
        if (a <= fit.noise_floor) continue;
        xs.push_back(std::abs(g.xi_of_index(i)));
        ys.push_back(std::log(a));
        klo = std::min(klo, std::abs(k));
        khi = std::max(khi, std::abs(k));
    }
    fit.modes_used = static_cast<int>(xs.size());
    if (fit.modes_used < 8) {
        fit.sigma_hat = std::numeric_limits<double>::quiet_NaN();
        fit.resolved = false;
        return fit;
    }
    fit.k_lo = klo;
    fit.k_hi = khi;

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double npts = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double denom = npts * sxx - sx * sx;
    if (denom <= 0.0) {
        fit.sigma_hat = std::numeric_limits<double>::quiet_NaN();
        fit.resolved = false;
        return fit;
    }
    const double slope = (npts * sxy - sx * sy) / denom;
    const double icept = (sy - slope * sx) / npts;
    double ss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (icept + slope * xs[i]);
        ss += r * r;
    }
    fit.sigma_hat = std::max(0.0, -slope);
    fit.residual = std::sqrt(ss / npts);
    fit.resolved = true;
    return fit;
}

DiagnosticsRecord diagnose(const SpectralField& f, double t,
                           const EquationSpec& eq,
                           const std::vector<double>& sigmas,
                           const std::vector<double>& hs,
                           double noise_floor_rel) {
    DiagnosticsRecord rec;
    rec.t = t;
    rec.mass = mass(f);
    if (eq.is_mkdv())
        rec.energy = energy_mkdv(f, eq.mu);
    else
        rec.momentum = tnls_momentum(f);
    const RadiusFit fit = estimate_radius(f, noise_floor_rel);
    rec.sigma_hat =
        fit.resolved ? fit.sigma_hat : std::numeric_limits<double>::quiet_NaN();
    rec.sigmas = sigmas;
    for (double sg : sigmas) {
        CheckedValue v;
        try {
            v = eq.is_mkdv() ? gevrey_energy(f, sg, eq.mu) : gevrey_mass(f, sg);
        } catch (const spectral::trust_radius_error&) {
            v.value = std::numeric_limits<double>::quiet_NaN();
            v.trusted = false;
        }
        rec.gevrey.push_back(v.value);
        rec.trusted.push_back(v.trusted);
    }
    for (double s : hs)
        rec.hs_norms[s] = spectral::gevrey_norm(f, {0.0, s});
    return rec;
}

DriftTable drift_sweep(const Trajectory& traj,
                       const std::vector<double>& sigmas,
                       const EquationSpec& eq, double exponent_p) {
    if (traj.states.empty())
        throw std::invalid_argument("drift_sweep: empty trajectory");
    DriftTable table;
    table.exponent_p = exponent_p;
    for (double sg : sigmas) {
        DriftRow row;
        row.sigma = sg;
        bool ok = true;
        double q0 = 0.0, sup = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < traj.states.size() && ok; ++i) {
            CheckedValue v;
            try {
                v = eq.is_mkdv() ? gevrey_energy(traj.states[i], sg, eq.mu)
                                 : gevrey_mass(traj.states[i], sg);
            } catch (const spectral::trust_radius_error&) {
                ok = false;
                break;
            }
            if (!v.trusted) ok = false;
            if (i == 0) q0 = v.value;
            sup = std::max(sup, v.value);
        }
        row.trusted = ok;
        if (ok) {
            row.q0 = q0;
            row.drift_raw = sup - q0;
            row.drift = std::max(0.0, row.drift_raw);
        }
        table.rows.push_back(row);
    }

    // log-log fit of the unclamped, trusted, positive drifts
    std::vector<double> lx, ly;
    for (const auto& r : table.rows)
        if (r.trusted && r.drift > 0.0) {
            lx.push_back(std::log(r.sigma));
            ly.push_back(std::log(r.drift));
        }
    if (lx.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
        const double n = static_cast<double>(lx.size());
        for (std::size_t i = 0; i < lx.size(); ++i) {
            sx += lx[i];
            sy += ly[i];
            sxx += lx[i] * lx[i];
            sxy += lx[i] * ly[i];
            syy += ly[i] * ly[i];
        }
        const double denom = n * sxx - sx * sx;
        if (denom > 0) {
            table.fitted_exponent = (n * sxy - sx * sy) / denom;
            const double r_num = n * sxy - sx * sy;
            const double r_den =
                std::sqrt(denom) * std::sqrt(std::max(n * syy - sy * sy, 0.0));
            table.fit_r2 = r_den > 0 ? (r_num / r_den) * (r_num / r_den) : 0.0;
        }
    }

    double c = 0.0;
    for (const auto& r : table.rows) {
        if (!r.trusted) continue;
        const double denom =
            std::pow(r.sigma, exponent_p) * r.q0 * r.q0 * (1.0 + r.q0);
        if (denom > 0.0) c = std::max(c, r.drift / denom);
    }
    table.constant = c;
    return table;
}

}  // namespace gvl::diag

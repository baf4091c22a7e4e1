#include "gevreylab/stepper.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gevreylab/fft.hpp"
#include "gevreylab/kernels.hpp"

namespace gvl::dynamics {

SpectralField linear_propagate(const SpectralField& f, const EquationSpec& eq,
                               double t) {
    const GridSpec& g = f.grid();
    std::vector<cd> out(g.n);
    for (int i = 0; i < g.n; ++i) {
        const double ph = t * eq.phase(g.xi_of_index(i));
        out[i] = f.coeffs()[i] * cd(std::cos(ph), std::sin(ph));
    }
    return SpectralField(g, std::move(out), f.is_real_field());
}

namespace {

// Nonlinear coupling: -mu u^2 u_x enters as prefactor -mu, -i gamma |v|^2 v
// as prefactor -i gamma.
cd nonlinear_prefactor(const EquationSpec& eq) {
    return eq.is_mkdv() ? cd(-eq.mu, 0.0) : cd(0.0, -eq.gamma);
}

std::vector<double> make_band_mask(const GridSpec& g, bool dealias) {
    std::vector<double> mask(g.n, 1.0);
    const int keep = g.n / 4;
    for (int i = 0; i < g.n; ++i) {
        const int k = g.mode_of_index(i);
        if ((dealias && std::abs(k) > keep) || k == -g.n / 2) mask[i] = 0.0;
    }
    return mask;
}

void project_real_coeffs(const GridSpec& g, std::vector<cd>& c) {
    c[0] = cd(c[0].real(), 0.0);
    c[g.index_of_mode(-g.n / 2)] = cd(0.0, 0.0);
    for (int k = 1; k < g.n / 2; ++k) {
        const int ip = k, im = g.index_of_mode(-k);
        const cd mean = 0.5 * (c[ip] + std::conj(c[im]));
        c[ip] = mean;
        c[im] = std::conj(mean);
    }
}

}  // namespace

SpectralField nonlinear_term(const SpectralField& f, const EquationSpec& eq) {
    const GridSpec& g = f.grid();
    const auto mask = make_band_mask(g, true);
    std::vector<cd> spec(f.coeffs().begin(), f.coeffs().end());
    kernels::rmul_inplace(spec.data(), mask.data(), g.n);

    std::vector<cd> u(g.n), prod(g.n), out(g.n);
    fft::backward(g.n, spec.data(), u.data());
    if (eq.is_mkdv()) {
        std::vector<cd> dspec(g.n), ux(g.n);
        for (int i = 0; i < g.n; ++i)
            dspec[i] = spec[i] * cd(0.0, g.xi_of_index(i)) * mask[i];
        dspec[g.index_of_mode(-g.n / 2)] = cd(0.0, 0.0);
        fft::backward(g.n, dspec.data(), ux.data());
        kernels::cubic_mkdv(prod.data(), u.data(), ux.data(), g.n);
    } else {
        kernels::cubic_tnls(prod.data(), u.data(), g.n);
    }
    fft::forward(g.n, prod.data(), out.data());
    const cd pref = nonlinear_prefactor(eq) / static_cast<double>(g.n);
    for (int i = 0; i < g.n; ++i) out[i] *= pref * mask[i];
    return SpectralField(g, std::move(out), f.is_real_field());
}

IfRk4::IfRk4(const GridSpec& grid, const EquationSpec& eq,
             const IntegratorConfig& cfg)
    : grid_(grid), eq_(eq), cfg_(cfg) {
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("integrator: dt <= 0");
    const int n = grid_.n;
    e_half_.resize(n);
    e_half_conj_.resize(n);
    e_full_.resize(n);
    e_full_conj_.resize(n);
    for (int i = 0; i < n; ++i) {
        const double ph = 0.5 * cfg_.dt * eq_.phase(grid_.xi_of_index(i));
        e_half_[i] = cd(std::cos(ph), std::sin(ph));
        e_half_conj_[i] = std::conj(e_half_[i]);
        e_full_[i] = e_half_[i] * e_half_[i];
        e_full_conj_[i] = std::conj(e_full_[i]);
    }
    band_mask_ = make_band_mask(grid_, cfg_.dealias);
    dx_.resize(n);
    for (int i = 0; i < n; ++i)
        dx_[i] = cd(0.0, grid_.xi_of_index(i)) * band_mask_[i];
    u_.resize(n);
    ux_.resize(n);
    prod_.resize(n);
    k1_.resize(n);
    k2_.resize(n);
    k3_.resize(n);
    k4_.resize(n);
    stage_.resize(n);
    tmp_.resize(n);
}

void IfRk4::eval_nonlinear(const cd* in, cd* out) {
    const int n = grid_.n;
    for (int i = 0; i < n; ++i) tmp_[i] = in[i] * band_mask_[i];
    fft::backward(n, tmp_.data(), u_.data());
    if (eq_.is_mkdv()) {
        kernels::cmul_inplace(tmp_.data(), dx_.data(), n);
        fft::backward(n, tmp_.data(), ux_.data());
        kernels::cubic_mkdv(prod_.data(), u_.data(), ux_.data(), n);
    } else {
        kernels::cubic_tnls(prod_.data(), u_.data(), n);
    }
    fft::forward(n, prod_.data(), out);
    const cd pref = nonlinear_prefactor(eq_) / static_cast<double>(n);
    for (int i = 0; i < n; ++i) out[i] *= pref * band_mask_[i];
}

void IfRk4::step_inplace(std::vector<cd>& c, long step_index) {
    const int n = grid_.n;
    const double dt = cfg_.dt;

    // k1 = N(c)
    eval_nonlinear(c.data(), k1_.data());

    // k2 = E_h^* N(E_h (c + dt/2 k1))
    stage_ = c;
    kernels::axpy(stage_.data(), 0.5 * dt, k1_.data(), n);
    kernels::cmul_inplace(stage_.data(), e_half_.data(), n);
    eval_nonlinear(stage_.data(), k2_.data());
    kernels::cmul_inplace(k2_.data(), e_half_conj_.data(), n);

    // k3 = E_h^* N(E_h (c + dt/2 k2))
    stage_ = c;
    kernels::axpy(stage_.data(), 0.5 * dt, k2_.data(), n);
    kernels::cmul_inplace(stage_.data(), e_half_.data(), n);
    eval_nonlinear(stage_.data(), k3_.data());
    kernels::cmul_inplace(k3_.data(), e_half_conj_.data(), n);

    // k4 = E^* N(E (c + dt k3))
    stage_ = c;
    kernels::axpy(stage_.data(), dt, k3_.data(), n);
    kernels::cmul_inplace(stage_.data(), e_full_.data(), n);
    eval_nonlinear(stage_.data(), k4_.data());
    kernels::cmul_inplace(k4_.data(), e_full_conj_.data(), n);

    kernels::rk4_combine(stage_.data(), c.data(), k1_.data(), k2_.data(),
                         k3_.data(), k4_.data(), dt, n);
    kernels::cmul(c.data(), stage_.data(), e_full_.data(), n);

    if (!kernels::all_finite(c.data(), n))
        throw std::runtime_error("blow-up or instability at step " +
                                 std::to_string(step_index));
}

SpectralField step(const SpectralField& f, const EquationSpec& eq,
                   const IntegratorConfig& cfg) {
    return integrate(f, eq, cfg, 1);
}

SpectralField integrate(const SpectralField& f0, const EquationSpec& eq,
                        const IntegratorConfig& cfg, long n_steps) {
    if (n_steps > cfg.max_steps)
        throw std::invalid_argument("integrate: n_steps exceeds max_steps");
    IfRk4 stepper(f0.grid(), eq, cfg);
    std::vector<cd> c(f0.coeffs().begin(), f0.coeffs().end());
    const bool project =
        eq.real_states() && cfg.reality_projection && f0.is_real_field();
    for (long s = 0; s < n_steps; ++s) {
        stepper.step_inplace(c, s);
        if (project) project_real_coeffs(f0.grid(), c);
    }
    return SpectralField(f0.grid(), std::move(c), f0.is_real_field());
}

}  // namespace gvl::dynamics

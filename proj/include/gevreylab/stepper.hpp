#pragma once

#include <vector>

#include "gevreylab/equation.hpp"
#include "gevreylab/field.hpp"

namespace gvl::dynamics {

// Free evolution: coefficient at xi multiplied by e^{i t phase(xi)}.
SpectralField linear_propagate(const SpectralField& f, const EquationSpec& eq,
                               double t);

// Pure nonlinear part of u_t = -u_xxx - mu u^2 u_x (mKdV) or
// v_t = -i alpha v_xx - beta v_xxx - i gamma |v|^2 v (tNLS), evaluated by
// dealiased physical-space products.
SpectralField nonlinear_term(const SpectralField& f, const EquationSpec& eq);

struct IntegratorConfig {
    double dt = 1e-3;
    bool dealias = true;
    bool reality_projection = true;  // honored for mKdV states only
    int max_steps = 100000000;
};

// Integrating-factor RK4: conjugate by the exact (unimodular) linear flow
// and apply classical RK4 to the transformed nonlinearity. Fourth order in
// dt; with the nonlinearity off it reproduces the linear group exactly.
class IfRk4 {
public:
    IfRk4(const GridSpec& grid, const EquationSpec& eq,
          const IntegratorConfig& cfg);

    // Advances coefficients by one step of cfg.dt. step_index is only used
    // in blow-up error messages.
    void step_inplace(std::vector<cd>& c, long step_index = 0);

    const IntegratorConfig& config() const { return cfg_; }

private:
    void eval_nonlinear(const cd* in, cd* out);

    GridSpec grid_;
    EquationSpec eq_;
    IntegratorConfig cfg_;
    std::vector<cd> e_half_, e_half_conj_, e_full_, e_full_conj_;
    std::vector<double> band_mask_;          // dealias + unpaired mode
    std::vector<cd> dx_;                     // i xi, masked
    std::vector<cd> u_, ux_, prod_, k1_, k2_, k3_, k4_, stage_, tmp_;
};

// One step of the integrating-factor RK4 scheme (convenience wrapper).
SpectralField step(const SpectralField& f, const EquationSpec& eq,
                   const IntegratorConfig& cfg);

// Integrate for n_steps, optionally sampling via callback(step, state).
// Throws std::runtime_error on NaN/Inf ("blow-up or instability").
SpectralField integrate(const SpectralField& f0, const EquationSpec& eq,
                        const IntegratorConfig& cfg, long n_steps);

}  // namespace gvl::dynamics

#pragma once

#include <stdexcept>

namespace gvl {

// Which dispersive model is being integrated, plus its coefficients.
//   mKdV:  u_t + u_xxx + mu u^2 u_x = 0,            u real, mu = +/-1
//   tNLS:  v_t + i alpha v_xx + beta v_xxx + i gamma |v|^2 v = 0, v complex
struct EquationSpec {
    enum class Kind { mkdv, tnls };

    Kind kind = Kind::mkdv;
    double mu = -1.0;
    double alpha = 0.0, beta = 0.0, gamma = 0.0;

    static EquationSpec mkdv(double mu) {
        if (mu != 1.0 && mu != -1.0)
            throw std::invalid_argument("mkdv: mu must be +1 or -1");
        EquationSpec eq;
        eq.kind = Kind::mkdv;
        eq.mu = mu;
        return eq;
    }

    static EquationSpec tnls(double alpha, double beta, double gamma) {
        if (beta == 0.0)
            throw std::invalid_argument(
                "tnls: beta must be nonzero (third-order dispersion)");
        EquationSpec eq;
        eq.kind = Kind::tnls;
        eq.alpha = alpha;
        eq.beta = beta;
        eq.gamma = gamma;
        return eq;
    }

    bool is_mkdv() const { return kind == Kind::mkdv; }
    bool real_states() const { return kind == Kind::mkdv; }

    // Dispersion relation of the linear part: the free evolution of mode xi
    // is multiplication by e^{i t phase(xi)}.
    double phase(double xi) const {
        return kind == Kind::mkdv ? xi * xi * xi
                                  : alpha * xi * xi + beta * xi * xi * xi;
    }
};

inline double phase_symbol(const EquationSpec& eq, double xi) {
    return eq.phase(xi);
}

}  // namespace gvl

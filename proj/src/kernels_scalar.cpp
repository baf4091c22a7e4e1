#include "gevreylab/kernels.hpp"

#include <cmath>

// Reference lane. Complex products are written out componentwise so the
// rounding sequence matches the AVX2 lane exactly (the build disables FMA
// contraction for the same reason).

namespace gvl::kernels::scalar {

void cmul(cd* dst, const cd* a, const cd* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        dst[i] = cd(ar * br - ai * bi, ai * br + ar * bi);
    }
}

void cmul_inplace(cd* a, const cd* b, std::size_t n) {
    cmul(a, a, b, n);
}

void rmul_inplace(cd* a, const double* w, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        a[i] = cd(a[i].real() * w[i], a[i].imag() * w[i]);
}

void axpy(cd* y, double alpha, const cd* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        y[i] = cd(y[i].real() + alpha * x[i].real(),
                  y[i].imag() + alpha * x[i].imag());
}

void rk4_combine(cd* out, const cd* d0, const cd* k1, const cd* k2,
                 const cd* k3, const cd* k4, double dt, std::size_t n) {
    const double h = dt / 6.0;
    for (std::size_t i = 0; i < n; ++i) {
        double sr = k1[i].real() + 2.0 * k2[i].real();
        double si = k1[i].imag() + 2.0 * k2[i].imag();
        sr = sr + 2.0 * k3[i].real();
        si = si + 2.0 * k3[i].imag();
        sr = sr + k4[i].real();
        si = si + k4[i].imag();
        out[i] = cd(d0[i].real() + h * sr, d0[i].imag() + h * si);
    }
}

double weighted_abs2_sum(const double* w, const cd* z, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double re = z[i].real(), im = z[i].imag();
        acc += w[i] * (re * re + im * im);
    }
    return acc;
}

double abs_pow_sum(const cd* z, int p, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double re = z[i].real(), im = z[i].imag();
        const double m = re * re + im * im;
        if (p == 2)
            acc += m;
        else if (p == 4)
            acc += m * m;
        else
            acc += m * m * m;
    }
    return acc;
}

void cubic_mkdv(cd* out, const cd* u, const cd* ux, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double ur = u[i].real(), ui = u[i].imag();
        const double sr = ur * ur - ui * ui;          // u^2
        const double si = ui * ur + ur * ui;
        const double dr = ux[i].real(), di = ux[i].imag();
        out[i] = cd(sr * dr - si * di, si * dr + sr * di);
    }
}

void cubic_tnls(cd* out, const cd* v, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double re = v[i].real(), im = v[i].imag();
        const double m = re * re + im * im;
        out[i] = cd(m * re, m * im);
    }
}

}  // namespace gvl::kernels::scalar

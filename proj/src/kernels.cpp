#include "gevreylab/kernels.hpp"

#include <cmath>

namespace gvl::kernels {

bool cpu_has_avx2() {
#if defined(GEVREYLAB_HAVE_AVX2)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {

Isa& current() {
    static Isa isa = cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
    return isa;
}

}  // namespace

Isa active() { return current(); }

void force(Isa isa) {
    if (isa == Isa::avx2 && !cpu_has_avx2()) isa = Isa::scalar;
    current() = isa;
}

const char* name(Isa isa) {
    return isa == Isa::avx2 ? "avx2" : "scalar";
}

#if defined(GEVREYLAB_HAVE_AVX2)
#define GVL_DISPATCH(fn, ...)                   \
    if (current() == Isa::avx2)                 \
        return avx2::fn(__VA_ARGS__);           \
    return scalar::fn(__VA_ARGS__)
#else
#define GVL_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#endif

void cmul(cd* dst, const cd* a, const cd* b, std::size_t n) {
    GVL_DISPATCH(cmul, dst, a, b, n);
}
void cmul_inplace(cd* a, const cd* b, std::size_t n) {
    GVL_DISPATCH(cmul_inplace, a, b, n);
}
void rmul_inplace(cd* a, const double* w, std::size_t n) {
    GVL_DISPATCH(rmul_inplace, a, w, n);
}
void axpy(cd* y, double alpha, const cd* x, std::size_t n) {
    GVL_DISPATCH(axpy, y, alpha, x, n);
}
void rk4_combine(cd* out, const cd* d0, const cd* k1, const cd* k2,
                 const cd* k3, const cd* k4, double dt, std::size_t n) {
    GVL_DISPATCH(rk4_combine, out, d0, k1, k2, k3, k4, dt, n);
}
double weighted_abs2_sum(const double* w, const cd* z, std::size_t n) {
    GVL_DISPATCH(weighted_abs2_sum, w, z, n);
}
double abs_pow_sum(const cd* z, int p, std::size_t n) {
    GVL_DISPATCH(abs_pow_sum, z, p, n);
}
void cubic_mkdv(cd* out, const cd* u, const cd* ux, std::size_t n) {
    GVL_DISPATCH(cubic_mkdv, out, u, ux, n);
}
void cubic_tnls(cd* out, const cd* v, std::size_t n) {
    GVL_DISPATCH(cubic_tnls, out, v, n);
}

#undef GVL_DISPATCH

double max_abs(const cd* z, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(z[i]));
    return m;
}

bool all_finite(const cd* z, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (!std::isfinite(z[i].real()) || !std::isfinite(z[i].imag()))
            return false;
    return true;
}

}  // namespace gvl::kernels

#pragma once

#include <complex>
#include <cstddef>

// Data-parallel inner loops shared by the spectral operators, the time
// stepper and the norm evaluations. Every operation exists as a scalar
// reference implementation and (on x86-64) an AVX2 variant; the top-level
// entry points dispatch at runtime. Elementwise kernels are bit-identical
// between the two lanes; reductions may differ by summation order and are
// equivalence-tested to a relative tolerance.

namespace gvl::kernels {

using cd = std::complex<double>;

enum class Isa { scalar, avx2 };

bool cpu_has_avx2();
Isa active();
void force(Isa isa);   // test hook; falls back to scalar if unsupported
const char* name(Isa isa);

// dst[i] = a[i] * b[i]
void cmul(cd* dst, const cd* a, const cd* b, std::size_t n);
// a[i] *= b[i]
void cmul_inplace(cd* a, const cd* b, std::size_t n);
// a[i] *= w[i]
void rmul_inplace(cd* a, const double* w, std::size_t n);
// y[i] += alpha * x[i]
void axpy(cd* y, double alpha, const cd* x, std::size_t n);
// out[i] = d0[i] + (dt/6) * (k1[i] + 2 k2[i] + 2 k3[i] + k4[i])
void rk4_combine(cd* out, const cd* d0, const cd* k1, const cd* k2,
                 const cd* k3, const cd* k4, double dt, std::size_t n);
// sum_i w[i] * |z[i]|^2
double weighted_abs2_sum(const double* w, const cd* z, std::size_t n);
// sum_i |z[i]|^p for p in {2, 4, 6}
double abs_pow_sum(const cd* z, int p, std::size_t n);
// out[i] = u[i]^2 * ux[i]
void cubic_mkdv(cd* out, const cd* u, const cd* ux, std::size_t n);
// out[i] = |v[i]|^2 * v[i]
void cubic_tnls(cd* out, const cd* v, std::size_t n);
// max_i |Re z[i]| + |Im z[i]| is not needed; this is max_i |z[i]| (modulus)
double max_abs(const cd* z, std::size_t n);
// true if every component is finite
bool all_finite(const cd* z, std::size_t n);

namespace scalar {
void cmul(cd* dst, const cd* a, const cd* b, std::size_t n);
void cmul_inplace(cd* a, const cd* b, std::size_t n);
void rmul_inplace(cd* a, const double* w, std::size_t n);
void axpy(cd* y, double alpha, const cd* x, std::size_t n);
void rk4_combine(cd* out, const cd* d0, const cd* k1, const cd* k2,
                 const cd* k3, const cd* k4, double dt, std::size_t n);
double weighted_abs2_sum(const double* w, const cd* z, std::size_t n);
double abs_pow_sum(const cd* z, int p, std::size_t n);
void cubic_mkdv(cd* out, const cd* u, const cd* ux, std::size_t n);
void cubic_tnls(cd* out, const cd* v, std::size_t n);
}  // namespace scalar

#if defined(GEVREYLAB_HAVE_AVX2)
namespace avx2 {
void cmul(cd* dst, const cd* a, const cd* b, std::size_t n);
void cmul_inplace(cd* a, const cd* b, std::size_t n);
void rmul_inplace(cd* a, const double* w, std::size_t n);
void axpy(cd* y, double alpha, const cd* x, std::size_t n);
void rk4_combine(cd* out, const cd* d0, const cd* k1, const cd* k2,
                 const cd* k3, const cd* k4, double dt, std::size_t n);
double weighted_abs2_sum(const double* w, const cd* z, std::size_t n);
double abs_pow_sum(const cd* z, int p, std::size_t n);
void cubic_mkdv(cd* out, const cd* u, const cd* ux, std::size_t n);
void cubic_tnls(cd* out, const cd* v, std::size_t n);
}  // namespace avx2
#endif

}  // namespace gvl::kernels

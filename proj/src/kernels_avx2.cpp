#include "gevreylab/kernels.hpp"

#if defined(GEVREYLAB_HAVE_AVX2)

#include <immintrin.h>

// AVX2 lane: two interleaved complex doubles per register. The multiply
// sequence mirrors the scalar lane op for op (mul, mul, addsub), so all
// elementwise kernels round identically to the reference. Reductions keep
// four running lanes and collapse them left to right at the end.

namespace gvl::kernels::avx2 {

namespace {

inline __m256d cmul2(__m256d a, __m256d b) {
    const __m256d br = _mm256_movedup_pd(b);            // [br0 br0 br1 br1]
    const __m256d bi = _mm256_permute_pd(b, 0xF);       // [bi0 bi0 bi1 bi1]
    const __m256d t1 = _mm256_mul_pd(a, br);            // [ar*br ai*br ..]
    const __m256d as = _mm256_permute_pd(a, 0x5);       // [ai ar ..]
    const __m256d t2 = _mm256_mul_pd(as, bi);           // [ai*bi ar*bi ..]
    return _mm256_addsub_pd(t1, t2);
}

inline double hsum(__m256d v) {
    alignas(32) double lane[4];
    _mm256_store_pd(lane, v);
    return ((lane[0] + lane[1]) + lane[2]) + lane[3];
}

inline const double* dptr(const cd* z) {
    return reinterpret_cast<const double*>(z);
}
inline double* dptr(cd* z) { return reinterpret_cast<double*>(z); }

}  // namespace

void cmul(cd* dst, const cd* a, const cd* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(dptr(a) + 2 * i);
        const __m256d vb = _mm256_loadu_pd(dptr(b) + 2 * i);
        _mm256_storeu_pd(dptr(dst) + 2 * i, cmul2(va, vb));
    }
    if (i < n) scalar::cmul(dst + i, a + i, b + i, n - i);
}

void cmul_inplace(cd* a, const cd* b, std::size_t n) { cmul(a, a, b, n); }

void rmul_inplace(cd* a, const double* w, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d wv = _mm256_setr_pd(w[i], w[i], w[i + 1], w[i + 1]);
        const __m256d va = _mm256_loadu_pd(dptr(a) + 2 * i);
        _mm256_storeu_pd(dptr(a) + 2 * i, _mm256_mul_pd(va, wv));
    }
    if (i < n) scalar::rmul_inplace(a + i, w + i, n - i);
}

void axpy(cd* y, double alpha, const cd* x, std::size_t n) {
    const __m256d av = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vy = _mm256_loadu_pd(dptr(y) + 2 * i);
        const __m256d vx = _mm256_loadu_pd(dptr(x) + 2 * i);
        _mm256_storeu_pd(dptr(y) + 2 * i,
                         _mm256_add_pd(vy, _mm256_mul_pd(av, vx)));
    }
    if (i < n) scalar::axpy(y + i, alpha, x + i, n - i);
}

void rk4_combine(cd* out, const cd* d0, const cd* k1, const cd* k2,
                 const cd* k3, const cd* k4, double dt, std::size_t n) {
    const __m256d hv = _mm256_set1_pd(dt / 6.0);
    const __m256d two = _mm256_set1_pd(2.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d v1 = _mm256_loadu_pd(dptr(k1) + 2 * i);
        const __m256d v2 = _mm256_loadu_pd(dptr(k2) + 2 * i);
        const __m256d v3 = _mm256_loadu_pd(dptr(k3) + 2 * i);
        const __m256d v4 = _mm256_loadu_pd(dptr(k4) + 2 * i);
        __m256d s = _mm256_add_pd(v1, _mm256_mul_pd(two, v2));
        s = _mm256_add_pd(s, _mm256_mul_pd(two, v3));
        s = _mm256_add_pd(s, v4);
        const __m256d v0 = _mm256_loadu_pd(dptr(d0) + 2 * i);
        _mm256_storeu_pd(dptr(out) + 2 * i,
                         _mm256_add_pd(v0, _mm256_mul_pd(hv, s)));
    }
    if (i < n)
        scalar::rk4_combine(out + i, d0 + i, k1 + i, k2 + i, k3 + i, k4 + i,
                            dt, n - i);
}

double weighted_abs2_sum(const double* w, const cd* z, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vz = _mm256_loadu_pd(dptr(z) + 2 * i);
        const __m256d wv = _mm256_setr_pd(w[i], w[i], w[i + 1], w[i + 1]);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(wv, _mm256_mul_pd(vz, vz)));
    }
    double total = hsum(acc);
    if (i < n) total += scalar::weighted_abs2_sum(w + i, z + i, n - i);
    return total;
}

double abs_pow_sum(const cd* z, int p, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vz = _mm256_loadu_pd(dptr(z) + 2 * i);
        const __m256d z2 = _mm256_mul_pd(vz, vz);
        // [m0 m0 m1 m1], m = re^2 + im^2
        __m256d m = _mm256_add_pd(z2, _mm256_permute_pd(z2, 0x5));
        if (p == 4)
            m = _mm256_mul_pd(m, m);
        else if (p == 6)
            m = _mm256_mul_pd(_mm256_mul_pd(m, m), m);
        acc = _mm256_add_pd(acc, m);
    }
    double total = 0.5 * hsum(acc);   // every modulus was counted twice
    if (i < n) total += scalar::abs_pow_sum(z + i, p, n - i);
    return total;
}

void cubic_mkdv(cd* out, const cd* u, const cd* ux, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vu = _mm256_loadu_pd(dptr(u) + 2 * i);
        const __m256d vd = _mm256_loadu_pd(dptr(ux) + 2 * i);
        _mm256_storeu_pd(dptr(out) + 2 * i, cmul2(cmul2(vu, vu), vd));
    }
    if (i < n) scalar::cubic_mkdv(out + i, u + i, ux + i, n - i);
}

void cubic_tnls(cd* out, const cd* v, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vv = _mm256_loadu_pd(dptr(v) + 2 * i);
        const __m256d z2 = _mm256_mul_pd(vv, vv);
        const __m256d m = _mm256_add_pd(z2, _mm256_permute_pd(z2, 0x5));
        _mm256_storeu_pd(dptr(out) + 2 * i, _mm256_mul_pd(m, vv));
    }
    if (i < n) scalar::cubic_tnls(out + i, v + i, n - i);
}

}  // namespace gvl::kernels::avx2

#endif  // GEVREYLAB_HAVE_AVX2

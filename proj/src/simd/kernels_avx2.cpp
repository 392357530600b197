#include "prab/simd.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define PRAB_HAVE_AVX2_TU 1
#include <immintrin.h>
#endif

namespace prab::simd::avx2 {

#if defined(PRAB_HAVE_AVX2_TU)

__attribute__((target("avx2,fma"))) double dot(const double* a, const double* b,
                                               std::size_t n) noexcept {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    __m256d acc2 = _mm256_setzero_pd();
    __m256d acc3 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
        acc2 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 8), _mm256_loadu_pd(b + i + 8), acc2);
        acc3 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 12), _mm256_loadu_pd(b + i + 12), acc3);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    }
    const __m256d acc = _mm256_add_pd(_mm256_add_pd(acc0, acc1), _mm256_add_pd(acc2, acc3));
    const __m128d lo = _mm256_castpd256_pd128(acc);
    const __m128d hi = _mm256_extractf128_pd(acc, 1);
    const __m128d pair = _mm_add_pd(lo, hi);
    double s = _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

__attribute__((target("avx2,fma"))) void axpy(double alpha, const double* x, double* y,
                                              std::size_t n) noexcept {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

__attribute__((target("avx2,fma"))) void mul_sub(const double* s, const double* x, double* y,
                                                 std::size_t n) noexcept {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(y + i, _mm256_fnmadd_pd(_mm256_loadu_pd(s + i), _mm256_loadu_pd(x + i),
                                                 _mm256_loadu_pd(y + i)));
    }
    for (; i < n; ++i) y[i] -= s[i] * x[i];
}

#else

// Not an x86-64 build: the dispatcher never selects these.
double dot(const double* a, const double* b, std::size_t n) noexcept {
    return scalar::dot(a, b, n);
}
void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept {
    scalar::axpy(alpha, x, y, n);
}
void mul_sub(const double* s, const double* x, double* y, std::size_t n) noexcept {
    scalar::mul_sub(s, x, y, n);
}

#endif

}  // namespace prab::simd::avx2

#include "prab/simd.hpp"

#if defined(__aarch64__) || defined(_M_ARM64)
#define PRAB_HAVE_NEON_TU 1
#include <arm_neon.h>
#endif

namespace prab::simd::neon {

#if defined(PRAB_HAVE_NEON_TU)

double dot(const double* a, const double* b, std::size_t n) noexcept {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    }
    double s = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept {
    const float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void mul_sub(const double* s, const double* x, double* y, std::size_t n) noexcept {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(y + i, vfmsq_f64(vld1q_f64(y + i), vld1q_f64(s + i), vld1q_f64(x + i)));
    }
    for (; i < n; ++i) y[i] -= s[i] * x[i];
}

#else

// Not an AArch64 build: the dispatcher never selects these.
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

}  // namespace prab::simd::neon

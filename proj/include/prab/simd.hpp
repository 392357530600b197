#pragma once

// Data-parallel inner kernels behind the O(N^2) product-integration sums.
//
// Every kernel has a scalar reference in `prab::simd::scalar` and, where the
// build target allows, AVX2+FMA and NEON variants. The dispatching entry points
// pick one implementation at first use from the CPU features (overridable with
// the PRAB_ISA environment variable: scalar, avx2, neon).

#include <cstddef>
#include <span>

namespace prab::simd {

enum class Isa { scalar, avx2, neon };

const char* isa_name(Isa isa) noexcept;

/// Whether this build contains the variant and the running CPU supports it.
bool isa_supported(Isa isa) noexcept;

/// Best supported variant on this machine.
Isa detect_isa() noexcept;

/// Variant currently used by the dispatching entry points.
Isa active_isa() noexcept;

/// Switches the dispatching entry points. Throws DomainError if unsupported.
void set_isa(Isa isa);

/// sum_i a[i] * b[i]
double dot(std::span<const double> a, std::span<const double> b);

/// y[i] += alpha * x[i]
void axpy(double alpha, std::span<const double> x, std::span<double> y);

/// y[i] -= s[i] * x[i]
void mul_sub(std::span<const double> s, std::span<const double> x, std::span<double> y);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n) noexcept;
void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept;
void mul_sub(const double* s, const double* x, double* y, std::size_t n) noexcept;
}  // namespace scalar

namespace avx2 {
double dot(const double* a, const double* b, std::size_t n) noexcept;
void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept;
void mul_sub(const double* s, const double* x, double* y, std::size_t n) noexcept;
}  // namespace avx2

namespace neon {
double dot(const double* a, const double* b, std::size_t n) noexcept;
void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept;
void mul_sub(const double* s, const double* x, double* y, std::size_t n) noexcept;
}  // namespace neon

}  // namespace prab::simd

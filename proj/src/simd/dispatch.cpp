#include <atomic>
#include <cstdlib>
#include <cstring>
#include <string>

#include "prab/errors.hpp"
#include "prab/simd.hpp"

namespace prab::simd {

namespace {

struct KernelTable {
    double (*dot)(const double*, const double*, std::size_t) noexcept;
    void (*axpy)(double, const double*, double*, std::size_t) noexcept;
    void (*mul_sub)(const double*, const double*, double*, std::size_t) noexcept;
};

constexpr KernelTable kScalar{&scalar::dot, &scalar::axpy, &scalar::mul_sub};
constexpr KernelTable kAvx2{&avx2::dot, &avx2::axpy, &avx2::mul_sub};
constexpr KernelTable kNeon{&neon::dot, &neon::axpy, &neon::mul_sub};

const KernelTable* table_for(Isa isa) {
    switch (isa) {
        case Isa::avx2: return &kAvx2;
        case Isa::neon: return &kNeon;
        case Isa::scalar: break;
    }
    return &kScalar;
}

Isa initial_isa() {
    Isa isa = detect_isa();
    if (const char* env = std::getenv("PRAB_ISA")) {
        for (Isa cand : {Isa::scalar, Isa::avx2, Isa::neon}) {
            if (std::strcmp(env, isa_name(cand)) == 0 && isa_supported(cand)) isa = cand;
        }
    }
    return isa;
}

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{initial_isa()};
    return isa;
}

const KernelTable& active() { return *table_for(current().load(std::memory_order_relaxed)); }

}  // namespace

const char* isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
        case Isa::scalar: break;
    }
    return "scalar";
}

bool isa_supported(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Isa::neon:
#if defined(__aarch64__) || defined(_M_ARM64)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Isa detect_isa() noexcept {
    if (isa_supported(Isa::avx2)) return Isa::avx2;
    if (isa_supported(Isa::neon)) return Isa::neon;
    return Isa::scalar;
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
    if (!isa_supported(isa)) {
        throw DomainError(std::string("SIMD variant not supported here: ") + isa_name(isa));
    }
    current().store(isa, std::memory_order_relaxed);
}

double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: operand lengths differ");
    return active().dot(a.data(), b.data(), a.size());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    if (x.size() != y.size()) throw DimensionMismatch("axpy: operand lengths differ");
    active().axpy(alpha, x.data(), y.data(), x.size());
}

void mul_sub(std::span<const double> s, std::span<const double> x, std::span<double> y) {
    if (s.size() != x.size() || x.size() != y.size()) {
        throw DimensionMismatch("mul_sub: operand lengths differ");
    }
    active().mul_sub(s.data(), x.data(), y.data(), x.size());
}

}  // namespace prab::simd

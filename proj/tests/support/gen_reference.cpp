// Prints tests/support/reference_values.hpp from the extended-precision oracles.
// Run once; the output is committed and the unit tests compare against it.

#include <cmath>
#include <cstdio>
#include <random>

#include "ext_precision.hpp"

using namespace prab::testing;

namespace {

void scalar(const char* name, double v) { std::printf("inline constexpr double %s = %.17g;\n", name, v); }

}  // namespace

int main() {
    std::printf("#pragma once\n\n// Frozen extended-precision reference values (regenerate with gen_reference).\n\n");
    std::printf("namespace prab::ref {\n\n");
    scalar("ml3_a07_b13_t25_z04", ml3_ext(0.7, 1.3, 2.5, 0.4));
    scalar("ml3_a05_b08_t06_zm2", ml3_ext(0.5, 0.8, 0.6, -2.0));
    scalar("ml3_a12_b21_tm15_z13", ml3_ext(1.2, 2.1, -1.5, 1.3));
    scalar("mv2_a05_a10_b08_z02_zm01", ml_mv2_ext(0.5, 1.0, 0.8, 0.2, -0.1));
    scalar("kmom_a05_b07_t12_w03_0_01_d0", kernel_moment_ext(0.5, 0.7, 1.2, 0.3, 0.0, 0.1, 0));
    scalar("kmom_a05_b07_t12_w03_0_01_d1", kernel_moment_ext(0.5, 0.7, 1.2, 0.3, 0.0, 0.1, 1));
    scalar("kmom_a12_b18_t04_wm07_03_05_d1", kernel_moment_ext(1.2, 1.8, 0.4, -0.7, 0.3, 0.5, 1));
    scalar("cpp_j1_a05_b03_t2_w04_t08", caputo_power_ext(1, 0.5, 0.3, 2.0, 0.4, 0.8));
    scalar("cpp_j2_a07_b14_t06_wm03_t05", caputo_power_ext(2, 0.7, 1.4, 0.6, -0.3, 0.5));
    scalar("cpp_j2_a10_b04_t15_w02_t07", caputo_power_ext(2, 1.0, 0.4, 1.5, 0.2, 0.7));
    scalar("mvk_n1_s025", mv_kernel1_ext(0.5, 1.3, 0.4, 2.0, 1, 0.25));
    scalar("mvk_n0_s09", mv_kernel1_ext(0.5, 1.3, 0.4, 2.0, 0, 0.9));
    scalar("relax06_t05", ml3_ext(0.6, 1.0, 1.0, -std::pow(0.5, 0.6)));
    scalar("relax06_t1", ml3_ext(0.6, 1.0, 1.0, -1.0));

    std::printf("\nstruct Mv2Case {\n    double a1, a2, beta, z1, z2, value;\n};\n\n");
    std::printf("inline constexpr Mv2Case mv2_cases[] = {\n");
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> alpha(0.6, 2.0);
    std::uniform_real_distribution<double> beta(0.5, 2.5);
    std::uniform_real_distribution<double> z(-1.0, 1.0);
    for (int c = 0; c < 50; ++c) {
        const double a1 = alpha(rng), a2 = alpha(rng), b = beta(rng), z1 = z(rng), z2 = z(rng);
        std::printf("    {%.17g, %.17g, %.17g, %.17g, %.17g, %.17g},\n", a1, a2, b, z1, z2,
                    ml_mv2_ext(a1, a2, b, z1, z2));
    }
    std::printf("};\n\n}  // namespace prab::ref\n");
}

#pragma once

#include <cmath>
#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "prab/grid.hpp"

namespace prab::test {

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

/// max |a - b| over the coarse nodes, b sampled on a finer grid with the same T.
inline double coarse_error(const GridFn& coarse, const GridFn& fine) {
    const std::size_t stride = (fine.size() - 1) / (coarse.size() - 1);
    return max_abs_diff(coarse.values(), fine.every(stride).values());
}

/// log2 of successive error ratios.
inline std::vector<double> orders(const std::vector<double>& errs) {
    std::vector<double> out;
    for (std::size_t i = 1; i < errs.size(); ++i) out.push_back(std::log2(errs[i - 1] / errs[i]));
    return out;
}

/// Mean order over the whole halving sequence: log2(e_first / e_last) per halving.
inline double fitted_order(const std::vector<double>& errs) {
    return std::log2(errs.front() / errs.back()) / static_cast<double>(errs.size() - 1);
}

/// Smooth random function a0 + a1 sin(w1 t + p1) + a2 exp(c t).
struct SmoothFn {
    double a0, a1, w1, p1, a2, c;
    double operator()(double t) const {
        return a0 + a1 * std::sin(w1 * t + p1) + a2 * std::exp(c * t);
    }
    static SmoothFn random(std::mt19937_64& rng) {
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        return {u(rng), u(rng), 1.0 + 2.0 * std::abs(u(rng)), u(rng), u(rng), u(rng)};
    }
};

}  // namespace prab::test

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace prab {

/// A real function sampled at t_k = k*h, h = T/(n-1), on [0, T].
class GridFn {
public:
    /// Throws DomainError unless T > 0, values.size() >= 2 and all values finite.
    GridFn(double T, std::vector<double> values);

    static GridFn zeros(double T, std::size_t n_points);

    template <class F>
    static GridFn sample(double T, std::size_t n_points, F&& f) {
        std::vector<double> v(n_points);
        const double h = T / static_cast<double>(n_points - 1);
        for (std::size_t k = 0; k < n_points; ++k) v[k] = f(static_cast<double>(k) * h);
        return GridFn(T, std::move(v));
    }

    double T() const noexcept { return T_; }
    std::size_t size() const noexcept { return values_.size(); }
    double h() const noexcept { return T_ / static_cast<double>(values_.size() - 1); }
    double t(std::size_t k) const noexcept { return static_cast<double>(k) * h(); }

    std::span<const double> values() const noexcept { return values_; }
    std::span<double> values() noexcept { return values_; }
    double operator[](std::size_t k) const noexcept { return values_[k]; }
    double& operator[](std::size_t k) noexcept { return values_[k]; }

    /// Same horizon and point count.
    bool same_grid(const GridFn& other) const noexcept;

    /// Every `stride`-th sample; (size()-1) must be divisible by stride.
    GridFn every(std::size_t stride) const;

private:
    double T_;
    std::vector<double> values_;
};

double sup_norm(std::span<const double> v) noexcept;
double sup_distance(std::span<const double> a, std::span<const double> b);

}  // namespace prab

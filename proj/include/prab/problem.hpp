#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "prab/grid.hpp"

namespace prab {

/// A coefficient or forcing term: either a callable of t or samples on a grid.
///
/// Callables are sampled once onto the solver grid. Tabulated data must sit on
/// exactly the solver grid; it is never resampled.
class FunctionSource {
public:
    using Fn = std::function<double(double)>;

    FunctionSource() : FunctionSource(0.0) {}
    FunctionSource(Fn f) : fn_(std::move(f)) {}  // NOLINT(google-explicit-constructor)
    FunctionSource(GridFn g) : table_(std::move(g)) {}  // NOLINT(google-explicit-constructor)
    /// A constant; remembered as such so the constant-coefficient route can use it.
    static FunctionSource constant(double c);

    bool is_callable() const noexcept { return static_cast<bool>(fn_); }
    bool is_tabulated() const noexcept { return table_.has_value(); }
    std::optional<double> constant_value() const noexcept { return constant_; }

    /// Evaluates a callable source. Throws ValidationError for tabulated data.
    double operator()(double t) const;
    /// Samples onto the uniform grid [0, T] with n points.
    GridFn sample(double T, std::size_t n_points) const;

private:
    explicit FunctionSource(double c);

    Fn fn_;
    std::optional<GridFn> table_;
    std::optional<double> constant_;
};

/// Linear IVP
///   C-D^{theta_0}_{alpha,beta_0,omega} v + sum_i sigma_i(t) C-D^{theta_i}_{alpha,beta_i,omega} v = g,
///   v^{(k)}(0) = e_k, k < n_0.
struct ProblemSpec {
    double alpha = 1.0;
    std::vector<double> betas;   ///< beta_0 > beta_1 > ... > beta_m >= 0
    std::vector<double> thetas;  ///< same length as betas
    double omega = 0.0;
    std::vector<FunctionSource> sigmas;  ///< m entries, sigma_1..sigma_m
    FunctionSource g;
    std::vector<double> e;  ///< n_0 initial values
    double T = 1.0;

    std::size_t m() const noexcept { return betas.empty() ? 0 : betas.size() - 1; }
    /// n_0 = floor(beta_0) + 1.
    std::size_t n0() const;

    /// Throws ValidationError naming the first violated hypothesis.
    void validate() const;
};

struct SolveConfig {
    std::size_t n_points = 1024;
    double picard_tol = 1e-10;
    std::size_t max_iters = 200;
    double series_tol = 1e-14;

    void validate() const;
};

struct Solution {
    GridFn v;
    GridFn u;
    std::size_t iterations = 0;
    double final_update_norm = 0.0;
    double residual_norm = 0.0;
    std::vector<double> update_history;
    std::optional<std::vector<GridFn>> canonical;
};

}  // namespace prab

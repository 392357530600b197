#pragma once

// Brute-force reference: the equivalent Volterra equation solved by forward
// substitution on a fine grid. Shares only kernel_moment with the solver.

#include <cstddef>

#include "prab/problem.hpp"

namespace prab {

struct OracleConfig {
    std::size_t n_points = 4097;
    double quad_tol = 1e-15;

    void validate() const;
};

/// General initial values are reduced by w = v - sum_j e_j t^j/j!. Coefficients
/// and forcing are sampled on the oracle grid, so they must be callables.
/// residual_norm holds the relative residual of the triangular solve.
Solution volterra_direct(const ProblemSpec& problem, const OracleConfig& cfg);

}  // namespace prab

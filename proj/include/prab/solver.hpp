#pragma once

// Variable-coefficient Prabhakar IVPs through the equivalent Volterra equation
//     u + sum_i sigma_i I^{theta_0-theta_i}_{alpha,beta_0-beta_i,omega} u = g,
//     v = sum_j e_j v_j + I^{theta_0}_{alpha,beta_0,omega} u_h.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "prab/fracops.hpp"
#include "prab/grid.hpp"
#include "prab/problem.hpp"

namespace prab {

/// Result of a Picard solve of u + K u = forcing.
struct PicardResult {
    GridFn u;
    std::size_t iterations = 0;
    double final_update_norm = 0.0;
    std::vector<double> update_history;
};

/// The discretized Volterra operator of a problem on a fixed grid.
///
/// Holds sampled sigma_i, the product-integration weights of each lower-order
/// operator and those of the lift I^{theta_0}_{alpha,beta_0,omega}.
class VolterraSystem {
public:
    VolterraSystem(const ProblemSpec& problem, const SolveConfig& cfg);

    std::size_t size() const noexcept { return n_; }
    double T() const noexcept { return T_; }
    const ProblemSpec& problem() const noexcept { return problem_; }

    /// out = K u = sum_i sigma_i (I_i u).
    void apply_lower(std::span<const double> u, std::span<double> out) const;
    /// I^{theta_0}_{alpha,beta_0,omega} u.
    GridFn lift(const GridFn& u) const;

    /// Picard iteration u_n = forcing - K u_{n-1} from u_0 = forcing.
    PicardResult picard(const GridFn& forcing) const;

    /// Phi_j on this grid (zero when W_j is empty).
    GridFn phi(std::size_t j) const;
    /// g - sum_j e_j Phi_j.
    GridFn effective_forcing() const;

    /// |u + K u - forcing| node-wise.
    GridFn residual_pointwise(const GridFn& u, const GridFn& forcing) const;
    /// ||u + K u - forcing||_inf / (1 + ||forcing||_inf).
    double residual(const GridFn& u, const GridFn& forcing) const;

private:
    ProblemSpec problem_;
    SolveConfig cfg_;
    std::size_t n_;
    double T_;
    SeriesOptions series_;
    std::vector<GridFn> sigma_;
    std::vector<std::vector<double>> neg_sigma_;
    std::vector<KernelWeights> lower_;
    KernelWeights lift_;
};

/// rho_j = min{ i in 1..m : beta_i <= j } for j = 0..n_0-1, empty when no such i.
std::vector<std::optional<std::size_t>> compute_rho(const ProblemSpec& problem);

/// Phi_j(t) = sum_{i >= rho_j} sigma_i(t) t^{j-beta_i} E^{-theta_i}_{alpha,j-beta_i+1}(omega t^alpha).
GridFn phi_j(const ProblemSpec& problem, std::size_t j, const SolveConfig& cfg);

/// Homogeneous-IC solve (all e_k must be zero).
Solution picard_solve(const ProblemSpec& problem, const SolveConfig& cfg);

/// Canonical member with its Volterra data.
struct CanonicalMember {
    GridFn v;    ///< t^j/j! - I^{theta_0} u
    GridFn u;    ///< Picard solution with forcing Phi_j
    GridFn phi;  ///< Phi_j
    std::size_t iterations = 0;
    double final_update_norm = 0.0;
};

std::vector<CanonicalMember> canonical_set(const ProblemSpec& problem, const SolveConfig& cfg);
/// v_0 .. v_{n_0-1}.
std::vector<GridFn> canonical_solutions(const ProblemSpec& problem, const SolveConfig& cfg);

/// General ICs by superposition; the canonical set is attached to the result.
Solution solve_ivp(const ProblemSpec& problem, const SolveConfig& cfg);

/// solve_ivp plus the Volterra data of each canonical member.
/// solution.u is the combined density: v = sum_j e_j t^j/j! + I^{theta_0} u.
struct IvpDetail {
    Solution solution;
    std::vector<CanonicalMember> members;
};
IvpDetail solve_ivp_detailed(const ProblemSpec& problem, const SolveConfig& cfg);

/// Relative sup-norm residual of sol.u in the Volterra form with the
/// effective forcing g - sum_j e_j Phi_j.
double residual(const ProblemSpec& problem, const Solution& sol, double series_tol = 1e-14);
GridFn residual_pointwise(const ProblemSpec& problem, const Solution& sol,
                          double series_tol = 1e-14);

}  // namespace prab

#pragma once

// Constant coefficients, one theta:
//   C-D^theta_{alpha,beta_0,omega} v + sum_i sigma_i C-D^theta_{alpha,beta_i,omega} v = g.
// The solution is a convolution of g with
//   K_c(s) = sum_n (theta)_n omega^n / n! * s^{beta_0+alpha n-1}
//            * E_{(beta_0-beta_1..beta_0-beta_m), alpha n+beta_0}(-sigma_1 s^{beta_0-beta_1}, ...).

#include <cstddef>
#include <vector>

#include "prab/fracops.hpp"
#include "prab/problem.hpp"

namespace prab {

struct ConstProblem {
    double alpha = 1.0;
    std::vector<double> betas;
    double theta = 0.0;
    double omega = 0.0;
    std::vector<double> sigmas;
    FunctionSource g;
    std::vector<double> e;
    double T = 1.0;

    /// The same IVP with theta_i = theta and constant sigma_i.
    ProblemSpec to_problem_spec() const;
    void validate() const;
};

/// n-th kernel term s^{beta_0+alpha n-1} E_{(...), alpha n+beta_0}(...), without
/// the (theta)_n omega^n / n! factor.
double mv_kernel(const ConstProblem& problem, std::size_t n, double s,
                 const SeriesOptions& opt = {});

/// A kernel written as sum_e coef_e s^{q_e - 1}, q_e = base + alpha n_e + sum_i mu_i k_{e,i}.
/// Power terms are kept factored so the kernel can be evaluated from power tables.
class PowerSeriesKernel {
public:
    struct Term {
        double coef;
        double q;
        std::size_t n;
        std::vector<unsigned> k;
    };

    /// K_c above, truncated for s in (0, T].
    static PowerSeriesKernel solution_kernel(const ConstProblem& p, const SeriesOptions& opt);
    /// Resolvent of sum_i sigma_i I^{mu_i}: R(s) = sum_{|k|>=1} multinomial prod(-sigma_i)^{k_i}
    /// s^{mu.k-1}/Gamma(mu.k).
    static PowerSeriesKernel resolvent_kernel(const ConstProblem& p, const SeriesOptions& opt);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    double operator()(double s) const;

    /// Product-integration weights on n_points nodes of spacing h.
    KernelWeights weights(double h, std::size_t n_points) const;

private:
    double base_ = 0.0;
    double alpha_ = 1.0;
    std::vector<double> mu_;
    std::vector<Term> terms_;
    std::size_t max_n_ = 0;
    unsigned max_k_ = 0;
};

/// Homogeneous-IC solution on n_points nodes.
GridFn solve_const_homog_ic(const ConstProblem& problem, const SolveConfig& cfg);

/// General ICs: v = sum_j e_j (t^j/j! - K_c * Phi_j) + K_c * g.
Solution solve_const_ivp(const ConstProblem& problem, const SolveConfig& cfg);

}  // namespace prab

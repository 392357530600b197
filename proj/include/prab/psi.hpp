#pragma once

// IVPs for Prabhakar operators taken with respect to a monotone function psi.
// Solved by conjugation: substitute tau = psi(t), solve the plain problem on a
// uniform tau grid, and map the result back.

#include <functional>

#include "prab/problem.hpp"

namespace prab {

struct PsiFunction {
    std::function<double(double)> psi;
    std::function<double(double)> psi_prime;
    double T = 1.0;

    /// psi(0) = 0, psi' > 0, strictly increasing on a 1024-point sweep, and
    /// psi' consistent with forward differences of psi (0.05 relative) on 512
    /// points. Throws PsiValidation.
    void validate() const;
};

PsiFunction psi_identity(double T);
/// a t, a > 0
PsiFunction psi_affine(double a, double T);
/// 1 - exp(-lambda t), lambda > 0
PsiFunction psi_exp_sat(double lambda, double T);
/// (t + c)^p - c^p, p > 0, c >= 0; c > 0 unless p = 1 (psi'(0) must be finite and positive)
PsiFunction psi_power(double c, double p, double T);

/// t in [0, T] with |psi(t) - y| <= 1e-12 (1 + |y|). Throws OutOfRange when
/// y is outside [0, psi(T)].
double psi_inverse(const PsiFunction& psi, double y);

/// base.e holds the psi-initial values ((1/psi') d/dt)^k v at 0. The base
/// coefficients and forcing must be callables; base.T must equal psi.T.
struct PsiProblemSpec {
    ProblemSpec base;
    PsiFunction psi;
};

/// Solution on the uniform t grid. v and u are monotone-cubic interpolants of
/// the tau-space solution, except that v within 64 tau-cells of the origin is
/// evaluated directly from the tau-space density. residual_norm and iteration
/// data are tau-space.
Solution solve_ivp_wrt(const PsiProblemSpec& problem, const SolveConfig& cfg);

/// The conjugated problem on [0, psi(T)] with sigma_i o psi^-1 and g o psi^-1.
ProblemSpec tau_problem(const PsiProblemSpec& problem);

/// Maps a function on the uniform tau grid over [0, psi(T)] to the uniform t
/// grid over [0, T] with the same point count (monotone cubic interpolation).
GridFn pull_back(const PsiFunction& psi, const GridFn& on_tau_grid);

struct PsiSolveDetail {
    Solution t_space;
    Solution tau_space;
    ProblemSpec tau_problem;
};
PsiSolveDetail solve_ivp_wrt_detailed(const PsiProblemSpec& problem, const SolveConfig& cfg);

}  // namespace prab

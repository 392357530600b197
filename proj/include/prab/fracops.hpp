#pragma once

// Discrete Prabhakar / Riemann-Liouville operators on uniform grids.
//
// Integrals are computed by product integration: the integrand is replaced by
// its piecewise-linear interpolant and the kernel
//     K(tau) = tau^(beta-1) E^theta_{alpha,beta}(omega tau^alpha)
// is integrated exactly against each hat function, term by term in its power
// series. The weak singularity at tau = 0 is therefore handled analytically.

#include <cstddef>
#include <span>
#include <vector>

#include "prab/grid.hpp"
#include "prab/special.hpp"

namespace prab {

/// Parameters of the Prabhakar integral I^theta_{alpha,beta,omega}.
struct PrabIntParams {
    double alpha;
    double beta;
    double theta;
    double omega;
};

/// Parameters of the Caputo-type derivative C-D^theta_{alpha,beta,omega}, beta >= 0.
struct PrabDerivParams {
    double alpha;
    double beta;
    double theta;
    double omega;

    /// m = floor(beta) + 1
    int order() const noexcept;
};

/// K(tau) = tau^(beta-1) E^theta_{alpha,beta}(omega tau^alpha), tau > 0.
double prabhakar_kernel(const PrabIntParams& p, double tau, const SeriesOptions& opt = {});

/// Exact integral of K(tau) * tau^degree over [a, b], degree in {0, 1}.
double kernel_moment(const PrabIntParams& p, double a, double b, int degree,
                     const SeriesOptions& opt = {});

/// Dimensionless hat integrals of a single power:
///   rising  = int_0^1 (l+u)^(q-1) u     du
///   falling = int_0^1 (l+u)^(q-1) (1-u) du
/// each multiplied by h^q. Accurate for every l (no cancellation for large l).
struct HatMoments {
    double rising;
    double falling;
};
HatMoments power_hat_moments(double q, std::size_t l, double h);

/// Hat integrals of the full kernel over [l h, (l+1) h]:
///   rising  = int K(tau) (tau - l h)/h dtau
///   falling = int K(tau) ((l+1) h - tau)/h dtau
HatMoments hat_moments(const PrabIntParams& p, double h, std::size_t l,
                       const SeriesOptions& opt = {});

/// Product-integration weights of I^theta_{alpha,beta,omega} on a uniform grid.
///
/// (I f)(t_j) = sum_{k<=j} w[j][k] f_k. The weights are Toeplitz except in
/// column 0, so two 1-D arrays hold them: conv[d] = w[j][j-d] for k >= 1 and
/// edge[j] = w[j][0]. Row 0 is zero.
class KernelWeights {
public:
    KernelWeights(const PrabIntParams& p, double h, std::size_t n_points,
                  const SeriesOptions& opt = {});

    /// Weights of an arbitrary kernel from its per-cell hat moments
    /// (cells[l] over [l h, (l+1) h], l = 0..n_points-2). params() is all zero.
    static KernelWeights from_cell_moments(double h, std::span<const HatMoments> cells);

    const PrabIntParams& params() const noexcept { return params_; }
    double h() const noexcept { return h_; }
    std::size_t size() const noexcept { return n_; }

    double weight(std::size_t j, std::size_t k) const noexcept;
    std::span<const double> conv() const noexcept { return conv_; }
    std::span<const double> edge() const noexcept { return edge_; }

    /// out[j] = sum_k w[j][k] f[k]; out.size() == f.size() == size().
    void apply(std::span<const double> f, std::span<double> out) const;
    std::vector<double> apply(std::span<const double> f) const;

private:
    KernelWeights(double h, std::span<const HatMoments> cells);

    PrabIntParams params_;
    double h_;
    std::size_t n_;
    std::vector<double> conv_;
    std::vector<double> edge_;
};

GridFn prabhakar_integral(const GridFn& f, const PrabIntParams& p, const SeriesOptions& opt = {});

/// Riemann-Liouville integral of order mu: the theta = 0 case of the above.
GridFn rl_integral(const GridFn& f, double mu, const SeriesOptions& opt = {});

/// Riemann-Liouville-type Prabhakar derivative of t^j/j!:
///   t^(j-beta) E^(-theta)_{alpha, j-beta+1}(omega t^alpha).
/// At t = 0 returns 0 for j > beta, 1 for j == beta, DomainError for j < beta.
double caputo_prabhakar_power(int j, double alpha, double beta, double theta, double omega,
                              double t, const SeriesOptions& opt = {});

/// Caputo-type derivative from the m-th derivative samples of f:
/// I^(-theta)_{alpha, m-beta, omega} f^(m). `f` only fixes the grid.
GridFn caputo_prabhakar_derivative(const GridFn& f, const GridFn& f_deriv_m,
                                   const PrabDerivParams& p, const SeriesOptions& opt = {});

/// Diagnostics-grade derivative of order `order` by repeated second-order
/// differences (central inside, one-sided at the ends).
GridFn finite_difference(const GridFn& f, int order);

}  // namespace prab

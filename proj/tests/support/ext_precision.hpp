#pragma once

// Extended-precision reference evaluations (50 decimal digits). Test-only:
// these are slow and exist to produce independent expected values.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <vector>

namespace prab::testing {

using Big = boost::multiprecision::cpp_bin_float_50;

/// Fixed-length partial sum of the three-parameter Mittag-Leffler series with
/// coefficients precomputed in extended precision.
class MLSeriesExt {
public:
    MLSeriesExt(double alpha, double beta, double theta, int terms = 200);
    Big eval(const Big& z) const;
    double operator()(double z) const;

private:
    std::vector<Big> coef_;  // (theta)_n / (n! Gamma(alpha n + beta))
};

double ml3_ext(double alpha, double beta, double theta, double z, int terms = 200);

/// Brute-force double sum of the bivariate Mittag-Leffler function over k1, k2 <= kmax.
double ml_mv2_ext(double a1, double a2, double beta, double z1, double z2, int kmax = 60);

/// Integral of tau^(beta-1+degree) E^theta_{alpha,beta}(omega tau^alpha) over [lo, hi]
/// by tanh-sinh quadrature in extended precision.
double kernel_moment_ext(double alpha, double beta, double theta, double omega, double lo,
                         double hi, int degree);

/// Partial sums of sum_n (-theta)_n omega^n t^(alpha n + j - beta) / (n! Gamma(alpha n + j - beta + 1)).
double caputo_power_ext(int j, double alpha, double beta, double theta, double omega, double t,
                        int terms = 200);

/// s^(beta0 + alpha n - 1) sum_k (-sigma)^k s^(mu k) / Gamma(mu k + alpha n + beta0) with
/// mu = beta0 - beta1 (one lower-order term).
double mv_kernel1_ext(double alpha, double beta0, double beta1, double sigma, int n, double s,
                      int kmax = 200);

}  // namespace prab::testing

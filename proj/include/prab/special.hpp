#pragma once

#include <cstddef>
#include <span>

namespace prab {

/// Truncation controls shared by every power series in the library.
struct SeriesOptions {
    double tol = 1e-14;          ///< relative tail tolerance
    std::size_t term_cap = 10'000;
    std::size_t layer_cap = 200;  ///< multivariate series only
};

struct MLParams {
    double alpha;
    double beta;
    double theta;
};

struct MvMLParams {
    std::span<const double> alphas;
    double beta;
};

/// Rising factorial (theta)_n by recurrence. (theta)_0 = 1.
double pochhammer(double theta, std::size_t n);

/// 1/Gamma(x). Entire: returns exactly 0 at the poles x = 0, -1, -2, ...
double rgamma(double x);

/// Three-parameter (Prabhakar) Mittag-Leffler function E^theta_{alpha,beta}(z).
///
/// Direct power series with Neumaier summation. The sum stops once the term
/// ratio has entered a non-increasing regime below 1/2 and the geometric
/// majorant of the tail is below `opt.tol / 10` relative to the partial sum.
/// Throws DomainError for alpha <= 0 or non-finite parameters, and
/// NonConvergence when `opt.term_cap` terms do not suffice or when cancellation
/// between terms would cost more than 1e-6 relative accuracy.
double ml3(const MLParams& p, double z, const SeriesOptions& opt = {});

/// Two-parameter Mittag-Leffler function; identical to ml3 with theta = 1.
double ml2(double alpha, double beta, double z, const SeriesOptions& opt = {});

/// Multivariate Mittag-Leffler function E_{(alpha_1..alpha_n),beta}(z_1..z_n).
///
/// Summed layer by layer in total degree k = k_1 + ... + k_n; each layer is
/// enumerated exactly with multinomial weights. Throws DimensionMismatch when
/// `zs.size() != p.alphas.size()`.
double ml_multivariate(const MvMLParams& p, std::span<const double> zs,
                       const SeriesOptions& opt = {});

namespace detail {

/// Neumaier-compensated accumulator.
class CompensatedSum {
public:
    void add(double x) noexcept;
    double value() const noexcept { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

/// Stateful tail certificate used by every series in the library.
///
/// Feed successive term magnitudes; `push` returns true once the geometric
/// majorant of the remaining tail is below tol/10 * |partial sum|.
class TailRule {
public:
    explicit TailRule(double tol) : tol_(tol) {}
    /// Returns true when summation may stop after this term.
    bool push(double term_abs, double partial_abs);

private:
    double tol_;
    double prev_abs_ = -1.0;
    double prev_ratio_ = -1.0;
    double max_abs_ = 0.0;
    int decreasing_run_ = 0;
};

}  // namespace detail

}  // namespace prab

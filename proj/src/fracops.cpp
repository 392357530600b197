#include "prab/fracops.hpp"

#include <cmath>
#include <string>

#include "prab/errors.hpp"
#include "prab/simd.hpp"

namespace prab {

namespace {

void require_valid(const PrabIntParams& p) {
    if (!(p.alpha > 0.0) || !std::isfinite(p.alpha)) {
        throw DomainError("Prabhakar integral alpha must be positive");
    }
    if (!(p.beta > 0.0) || !std::isfinite(p.beta)) {
        throw DomainError("Prabhakar integral beta must be positive");
    }
    if (!std::isfinite(p.theta) || !std::isfinite(p.omega)) {
        throw DomainError("Prabhakar integral theta and omega must be finite");
    }
}

// b^p - a^p for 0 <= a <= b without cancellation when a is close to b.
double powdiff(double a, double b, double p) {
    if (a == 0.0) return std::pow(b, p);
    return std::pow(a, p) * std::expm1(p * std::log1p((b - a) / a));
}

// Drives the kernel power series sum_n c_n * (...) with
// c_n = (theta)_n omega^n / (n! Gamma(alpha n + beta)). The callback gets
// (c_n, q_n) and returns the absolute size of the contribution it added.
template <class Visit>
void for_each_kernel_term(const PrabIntParams& p, const SeriesOptions& opt, Visit&& visit,
                          const char* what) {
    const bool single = p.theta == 0.0 || p.omega == 0.0;
    detail::TailRule tail(opt.tol);
    double coef = 1.0;  // (theta)_n omega^n / n!
    for (std::size_t n = 0; n < opt.term_cap; ++n) {
        if (n > 0) {
            const double f = p.theta + static_cast<double>(n - 1);
            if (f == 0.0) return;
            coef *= f * p.omega / static_cast<double>(n);
            if (!std::isfinite(coef)) break;
        }
        const double q = p.alpha * static_cast<double>(n) + p.beta;
        const double c = coef * rgamma(q);
        const auto [added, partial] = visit(c, q);
        if (single) return;
        if (n > 0 && added == 0.0) return;  // underflow: nothing more can contribute
        if (tail.push(added, partial)) return;
    }
    throw NonConvergence(std::string(what) + ": kernel series did not converge within " +
                         std::to_string(opt.term_cap) + " terms");
}

struct Contribution {
    double added;
    double partial;
};

}  // namespace

int PrabDerivParams::order() const noexcept { return static_cast<int>(std::floor(beta)) + 1; }

double prabhakar_kernel(const PrabIntParams& p, double tau, const SeriesOptions& opt) {
    require_valid(p);
    if (!(tau > 0.0)) throw DomainError("Prabhakar kernel needs tau > 0");
    return std::pow(tau, p.beta - 1.0) * ml3({p.alpha, p.beta, p.theta}, p.omega * std::pow(tau, p.alpha), opt);
}

double kernel_moment(const PrabIntParams& p, double a, double b, int degree,
                     const SeriesOptions& opt) {
    require_valid(p);
    if (degree != 0 && degree != 1) throw DomainError("kernel_moment degree must be 0 or 1");
    if (!(a >= 0.0) || !(b >= a) || !std::isfinite(b)) {
        throw DomainError("kernel_moment needs 0 <= a <= b");
    }
    if (a == b) return 0.0;
    detail::CompensatedSum sum;
    for_each_kernel_term(
        p, opt,
        [&](double c, double q) {
            const double e = q + static_cast<double>(degree);
            const double term = c * powdiff(a, b, e) / e;
            sum.add(term);
            return Contribution{std::abs(term), std::abs(sum.value())};
        },
        "kernel_moment");
    return sum.value();
}

HatMoments power_hat_moments(double q, std::size_t l, double h) {
    if (l == 0) {
        const double hq = std::pow(h, q);
        return {hq / (q + 1.0), hq / (q * (q + 1.0))};
    }
    const double L = static_cast<double>(l);
    if (l < 4) {
        // Closed forms; the cancellation here costs under one digit.
        const double pq = powdiff(L, L + 1.0, q);
        const double pq1 = powdiff(L, L + 1.0, q + 1.0);
        const double rising = pq1 / (q + 1.0) - L * pq / q;
        const double falling = (L + 1.0) * pq / q - pq1 / (q + 1.0);
        const double hq = std::pow(h, q);
        return {hq * rising, hq * falling};
    }
    // (l+u)^(q-1) = l^(q-1) sum_k binom(q-1, k) (u/l)^k, |u/l| <= 1/4.
    const double x = 1.0 / L;
    double b = 1.0;
    double xk = 1.0;
    double s_rise = 0.0;
    double s_fall = 0.0;
    for (std::size_t k = 0; k < 4000; ++k) {
        const double K = static_cast<double>(k);
        const double t = b * xk;
        s_rise += t / (K + 2.0);
        s_fall += t / ((K + 1.0) * (K + 2.0));
        if (K > q && std::abs(t) <= 1e-17 * std::abs(s_fall)) break;
        b *= (q - 1.0 - K) / (K + 1.0);
        if (b == 0.0) break;
        xk *= x;
    }
    const double scale = h * std::pow(L * h, q - 1.0);
    return {scale * s_rise, scale * s_fall};
}

HatMoments hat_moments(const PrabIntParams& p, double h, std::size_t l, const SeriesOptions& opt) {
    require_valid(p);
    if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("hat_moments needs h > 0");
    detail::CompensatedSum rising;
    detail::CompensatedSum falling;
    for_each_kernel_term(
        p, opt,
        [&](double c, double q) {
            const HatMoments m = power_hat_moments(q, l, h);
            const double r = c * m.rising;
            const double f = c * m.falling;
            rising.add(r);
            falling.add(f);
            return Contribution{std::abs(r) + std::abs(f),
                                std::abs(rising.value()) + std::abs(falling.value())};
        },
        "hat_moments");
    return {rising.value(), falling.value()};
}

KernelWeights::KernelWeights(const PrabIntParams& p, double h, std::size_t n_points,
                             const SeriesOptions& opt)
    : params_(p), h_(h), n_(n_points) {
    require_valid(p);
    if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("kernel weights need h > 0");
    if (n_points < 2) throw DomainError("kernel weights need at least two points");
    std::vector<HatMoments> cells(n_points - 1);
    for (std::size_t l = 0; l + 1 < n_points; ++l) cells[l] = hat_moments(p, h, l, opt);
    *this = KernelWeights(h, cells);
    params_ = p;
}

KernelWeights::KernelWeights(double h, std::span<const HatMoments> cells)
    : params_{0.0, 0.0, 0.0, 0.0}, h_(h), n_(cells.size() + 1) {
    if (cells.empty()) throw DomainError("kernel weights need at least one cell");
    // cells[l] = (A(l), B(l)): rising / falling hat moments over the l-th cell.
    conv_.assign(n_ - 1, 0.0);
    edge_.assign(n_, 0.0);
    conv_[0] = cells[0].falling;
    for (std::size_t d = 1; d + 1 < n_; ++d) conv_[d] = cells[d - 1].rising + cells[d].falling;
    for (std::size_t j = 1; j < n_; ++j) edge_[j] = cells[j - 1].rising;
}

KernelWeights KernelWeights::from_cell_moments(double h, std::span<const HatMoments> cells) {
    if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("kernel weights need h > 0");
    return KernelWeights(h, cells);
}

double KernelWeights::weight(std::size_t j, std::size_t k) const noexcept {
    if (j == 0 || k > j || j >= n_) return 0.0;
    if (k == 0) return edge_[j];
    return conv_[j - k];
}

void KernelWeights::apply(std::span<const double> f, std::span<double> out) const {
    if (f.size() != n_ || out.size() != n_) {
        throw DimensionMismatch("kernel weights built for " + std::to_string(n_) +
                                " points, applied to " + std::to_string(f.size()));
    }
    std::vector<double> rev(f.rbegin(), f.rend());
    out[0] = 0.0;
    for (std::size_t j = 1; j < n_; ++j) {
        // sum_{d<j} conv[d] f[j-d]; f[j-d] == rev[n-1-j+d]
        const double body = simd::dot(std::span<const double>(conv_).first(j),
                                      std::span<const double>(rev).subspan(n_ - 1 - j, j));
        out[j] = body + edge_[j] * f[0];
    }
}

std::vector<double> KernelWeights::apply(std::span<const double> f) const {
    std::vector<double> out(f.size());
    apply(f, out);
    return out;
}

GridFn prabhakar_integral(const GridFn& f, const PrabIntParams& p, const SeriesOptions& opt) {
    const KernelWeights w(p, f.h(), f.size(), opt);
    return GridFn(f.T(), w.apply(f.values()));
}

GridFn rl_integral(const GridFn& f, double mu, const SeriesOptions& opt) {
    if (!(mu > 0.0)) throw DomainError("Riemann-Liouville order must be positive");
    return prabhakar_integral(f, {1.0, mu, 0.0, 0.0}, opt);
}

double caputo_prabhakar_power(int j, double alpha, double beta, double theta, double omega,
                              double t, const SeriesOptions& opt) {
    if (j < 0) throw DomainError("power index j must be nonnegative");
    if (!(t >= 0.0)) throw DomainError("caputo_prabhakar_power needs t >= 0");
    const double e = static_cast<double>(j) - beta;
    if (t == 0.0) {
        if (e > 0.0) return 0.0;
        if (e == 0.0) return 1.0;
        throw DomainError("t^(j-beta) is singular at t = 0 for j < beta");
    }
    return std::pow(t, e) * ml3({alpha, e + 1.0, -theta}, omega * std::pow(t, alpha), opt);
}

GridFn caputo_prabhakar_derivative(const GridFn& f, const GridFn& f_deriv_m,
                                   const PrabDerivParams& p, const SeriesOptions& opt) {
    if (!(p.beta >= 0.0)) throw DomainError("Caputo derivative order must be nonnegative");
    if (!f.same_grid(f_deriv_m)) {
        throw DimensionMismatch("derivative samples must share the grid of f");
    }
    const double order = static_cast<double>(p.order()) - p.beta;
    return prabhakar_integral(f_deriv_m, {p.alpha, order, -p.theta, p.omega}, opt);
}

GridFn finite_difference(const GridFn& f, int order) {
    if (order < 0) throw DomainError("derivative order must be nonnegative");
    const std::size_t n = f.size();
    if (n < 3) throw DomainError("finite differences need at least three points");
    std::vector<double> cur(f.values().begin(), f.values().end());
    std::vector<double> next(n);
    const double h = f.h();
    for (int r = 0; r < order; ++r) {
        next[0] = (-3.0 * cur[0] + 4.0 * cur[1] - cur[2]) / (2.0 * h);
        next[n - 1] = (3.0 * cur[n - 1] - 4.0 * cur[n - 2] + cur[n - 3]) / (2.0 * h);
        for (std::size_t k = 1; k + 1 < n; ++k) next[k] = (cur[k + 1] - cur[k - 1]) / (2.0 * h);
        cur.swap(next);
    }
    return GridFn(f.T(), std::move(cur));
}

}  // namespace prab

#include "prab/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "prab/errors.hpp"

namespace prab {

namespace detail {

void CompensatedSum::add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
        carry_ += (sum_ - t) + x;
    } else {
        carry_ += (x - t) + sum_;
    }
    sum_ = t;
}

bool TailRule::push(double term_abs, double partial_abs) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (term_abs > max_abs_) max_abs_ = term_abs;
    if (prev_abs_ <= 0.0) {
        prev_abs_ = term_abs;
        return false;
    }
    const double ratio = term_abs / prev_abs_;
    if (ratio < 0.5 && prev_ratio_ >= 0.0 && ratio <= prev_ratio_ * (1.0 + 1e-12)) {
        ++decreasing_run_;
    } else {
        decreasing_run_ = 0;
    }
    prev_ratio_ = ratio;
    prev_abs_ = term_abs;
    if (decreasing_run_ < 2) return false;
    const double tail = term_abs * ratio / (1.0 - ratio);
    // A tenth of the budget goes to truncation; the rest covers rounding.
    return tail <= 0.1 * tol_ * partial_abs || tail <= 0.25 * eps * max_abs_;
}

}  // namespace detail

namespace {

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::nearbyint(x);
}

void require_finite(double x, const char* name) {
    if (!std::isfinite(x)) throw DomainError(std::string(name) + " must be finite");
}

// log|1/Gamma(x)| and its sign, for x away from the poles.
struct LogRgamma {
    double log_abs;
    double sign;
};

LogRgamma log_rgamma(double x) {
    int sgn = 1;
    const double lg = ::lgamma_r(x, &sgn);
    return {-lg, static_cast<double>(sgn)};
}

// Direct summation of an alternating series loses about eps * max|term|.
// Past this relative loss the result is reported instead of returned.
constexpr double kCancellationLimit = 1e-6;

double checked(double sum, double max_abs, double lead_abs, const char* what) {
    const double lost = std::numeric_limits<double>::epsilon() * max_abs;
    const double scale = std::max(std::abs(sum), 1e-3 * lead_abs);
    if (lost > kCancellationLimit * scale) {
        throw NonConvergence(std::string(what) + ": cancellation in the series exceeds " +
                             "double precision (argument too large for direct summation)");
    }
    return sum;
}

}  // namespace

double pochhammer(double theta, std::size_t n) {
    double p = 1.0;
    for (std::size_t k = 0; k < n; ++k) p *= theta + static_cast<double>(k);
    return p;
}

double rgamma(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    if (x > 171.0) {
        const auto lr = log_rgamma(x);
        return lr.sign * std::exp(lr.log_abs);
    }
    return 1.0 / std::tgamma(x);
}

double ml3(const MLParams& p, double z, const SeriesOptions& opt) {
    if (!(p.alpha > 0.0) || !std::isfinite(p.alpha)) {
        throw DomainError("Mittag-Leffler alpha must be positive and finite");
    }
    require_finite(p.beta, "Mittag-Leffler beta");
    require_finite(p.theta, "Mittag-Leffler theta");
    require_finite(z, "Mittag-Leffler argument");

    if (z == 0.0 || p.theta == 0.0) return rgamma(p.beta);

    detail::CompensatedSum sum;
    detail::TailRule tail(opt.tol);
    double max_abs = 0.0;
    const double lead_abs = std::abs(rgamma(p.beta));
    // c_n = (theta)_n z^n / n!, tracked linearly while representable and
    // in log form as a fallback for large |z| or large n.
    double coef = 1.0;
    double log_coef = 0.0;
    double coef_sign = 1.0;
    const double log_abs_z = std::log(std::abs(z));
    for (std::size_t n = 0; n < opt.term_cap; ++n) {
        if (n > 0) {
            const double f = p.theta + static_cast<double>(n - 1);
            if (f == 0.0) {  // (theta)_n vanishes from here on
                return checked(sum.value(), max_abs, lead_abs, "Mittag-Leffler");
            }
            coef *= f * z / static_cast<double>(n);
            log_coef += std::log(std::abs(f)) + log_abs_z - std::log(static_cast<double>(n));
            if ((f < 0.0) != (z < 0.0)) coef_sign = -coef_sign;
        }
        const double q = p.alpha * static_cast<double>(n) + p.beta;
        double term;
        if (is_nonpositive_integer(q)) {
            term = 0.0;
        } else if (q <= 170.0 && std::abs(coef) < 1e300) {
            term = coef / std::tgamma(q);
        } else {
            const auto lr = log_rgamma(q);
            term = coef_sign * lr.sign * std::exp(log_coef + lr.log_abs);
        }
        sum.add(term);
        max_abs = std::max(max_abs, std::abs(term));
        if (term != 0.0 && tail.push(std::abs(term), std::abs(sum.value()))) {
            return checked(sum.value(), max_abs, lead_abs, "Mittag-Leffler");
        }
    }
    throw NonConvergence("Mittag-Leffler series did not converge within " +
                         std::to_string(opt.term_cap) + " terms");
}

double ml2(double alpha, double beta, double z, const SeriesOptions& opt) {
    return ml3({alpha, beta, 1.0}, z, opt);
}

namespace {

// Visits every composition (k_1..k_n) of k.
template <class F>
void for_each_composition(std::size_t k, std::vector<std::size_t>& parts, std::size_t pos,
                          F&& visit) {
    const std::size_t n = parts.size();
    if (pos + 1 == n) {
        parts[pos] = k;
        visit(parts);
        return;
    }
    for (std::size_t i = 0; i <= k; ++i) {
        parts[pos] = i;
        for_each_composition(k - i, parts, pos + 1, visit);
    }
}

}  // namespace

double ml_multivariate(const MvMLParams& p, std::span<const double> zs,
                       const SeriesOptions& opt) {
    const std::size_t n = p.alphas.size();
    if (n == 0) throw DomainError("multivariate Mittag-Leffler needs at least one variable");
    if (zs.size() != n) {
        throw DimensionMismatch("multivariate Mittag-Leffler: " + std::to_string(zs.size()) +
                                " arguments for " + std::to_string(n) + " parameters");
    }
    for (double a : p.alphas) {
        if (!(a > 0.0) || !std::isfinite(a)) {
            throw DomainError("multivariate Mittag-Leffler alphas must be positive");
        }
    }
    if (!(p.beta > 0.0) || !std::isfinite(p.beta)) {
        throw DomainError("multivariate Mittag-Leffler beta must be positive");
    }
    bool all_zero = true;
    std::vector<double> log_abs_z(n);
    for (std::size_t i = 0; i < n; ++i) {
        require_finite(zs[i], "multivariate Mittag-Leffler argument");
        if (zs[i] != 0.0) all_zero = false;
        log_abs_z[i] = zs[i] != 0.0 ? std::log(std::abs(zs[i])) : 0.0;
    }
    if (all_zero) return rgamma(p.beta);

    detail::CompensatedSum sum;
    sum.add(rgamma(p.beta));
    std::vector<std::size_t> parts(n);
    double prev_layer_abs = -1.0;
    double max_abs = 0.0;
    int quiet_layers = 0;
    for (std::size_t k = 1; k <= opt.layer_cap; ++k) {
        detail::CompensatedSum layer;
        double layer_abs = 0.0;
        const double log_kfact = std::lgamma(static_cast<double>(k) + 1.0);
        for_each_composition(k, parts, 0, [&](const std::vector<std::size_t>& ks) {
            double log_term = log_kfact;
            double sign = 1.0;
            double q = p.beta;
            for (std::size_t i = 0; i < n; ++i) {
                if (ks[i] == 0) continue;
                if (zs[i] == 0.0) return;
                const double ki = static_cast<double>(ks[i]);
                log_term += ki * log_abs_z[i] - std::lgamma(ki + 1.0);
                if (zs[i] < 0.0 && (ks[i] & 1U)) sign = -sign;
                q += p.alphas[i] * ki;
            }
            const auto lr = log_rgamma(q);
            const double term = sign * lr.sign * std::exp(log_term + lr.log_abs);
            layer.add(term);
            layer_abs += std::abs(term);
        });
        sum.add(layer.value());
        max_abs = std::max(max_abs, layer_abs);
        const double total = std::abs(sum.value());
        const bool small = layer_abs <= opt.tol * total;
        const bool decaying = prev_layer_abs >= 0.0 && layer_abs <= 0.5 * prev_layer_abs;
        quiet_layers = (small && decaying) ? quiet_layers + 1 : 0;
        if (quiet_layers >= 2 || layer_abs == 0.0) {
            return checked(sum.value(), max_abs, std::abs(rgamma(p.beta)),
                           "multivariate Mittag-Leffler");
        }
        prev_layer_abs = layer_abs;
    }
    throw NonConvergence("multivariate Mittag-Leffler series did not converge within " +
                         std::to_string(opt.layer_cap) + " layers");
}

}  // namespace prab

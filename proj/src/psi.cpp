#include "prab/psi.hpp"

// pchip.hpp in Boost 1.74 calls isnan unqualified; math.h brings it into scope.
#include <math.h>

#include <boost/math/interpolators/pchip.hpp>

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "prab/errors.hpp"
#include "prab/fracops.hpp"
#include "prab/solver.hpp"

namespace prab {

namespace {

constexpr std::size_t kSweep = 1024;
constexpr std::size_t kPrimeChecks = 512;
constexpr double kPrimeRelTol = 0.05;

std::string at(double t) { return " at t = " + std::to_string(t); }

}  // namespace

void PsiFunction::validate() const {
    if (!psi || !psi_prime) throw PsiValidation("psi and psi' must both be supplied");
    if (!(T > 0.0) || !std::isfinite(T)) throw PsiValidation("psi horizon T must be positive");
    const double p0 = psi(0.0);
    const double pT = psi(T);
    if (!std::isfinite(pT) || !(pT > 0.0)) throw PsiValidation("psi(T) must be positive");
    if (std::abs(p0) > 1e-14 * (1.0 + std::abs(pT))) {
        throw PsiValidation("psi(0) must be 0, got " + std::to_string(p0));
    }
    double prev = p0;
    for (std::size_t k = 0; k <= kSweep; ++k) {
        const double t = T * static_cast<double>(k) / static_cast<double>(kSweep);
        const double d = psi_prime(t);
        if (!(d > 0.0) || !std::isfinite(d)) throw PsiValidation("psi' must be positive" + at(t));
        if (k > 0) {
            const double p = psi(t);
            if (!(p > prev)) throw PsiValidation("psi must be strictly increasing" + at(t));
            prev = p;
        }
    }
    const double h = T / static_cast<double>(kPrimeChecks);
    for (std::size_t k = 0; k < kPrimeChecks; ++k) {
        const double t = h * static_cast<double>(k);
        const double fd = (psi(t + h) - psi(t)) / h;
        const double d = psi_prime(t);
        if (std::abs(fd - d) > kPrimeRelTol * std::max(std::abs(d), std::abs(fd))) {
            throw PsiValidation("psi' disagrees with differences of psi" + at(t));
        }
    }
}

PsiFunction psi_identity(double T) {
    return {[](double t) { return t; }, [](double) { return 1.0; }, T};
}

PsiFunction psi_affine(double a, double T) {
    if (!(a > 0.0)) throw PsiValidation("affine psi needs a > 0");
    return {[a](double t) { return a * t; }, [a](double) { return a; }, T};
}

PsiFunction psi_exp_sat(double lambda, double T) {
    if (!(lambda > 0.0)) throw PsiValidation("exp_sat psi needs lambda > 0");
    return {[lambda](double t) { return -std::expm1(-lambda * t); },
            [lambda](double t) { return lambda * std::exp(-lambda * t); }, T};
}

PsiFunction psi_power(double c, double p, double T) {
    if (!(p > 0.0)) throw PsiValidation("power psi needs p > 0");
    if (!(c >= 0.0)) throw PsiValidation("power psi needs c >= 0");
    if (c == 0.0 && p != 1.0) throw PsiValidation("power psi needs c > 0 unless p = 1");
    return {[c, p](double t) { return std::pow(t + c, p) - std::pow(c, p); },
            [c, p](double t) { return p * std::pow(t + c, p - 1.0); }, T};
}

double psi_inverse(const PsiFunction& f, double y) {
    const double pT = f.psi(f.T);
    const double tol = 1e-12 * (1.0 + std::abs(y));
    if (!(y >= 0.0) || !(y <= pT + tol)) {
        throw OutOfRange("psi_inverse: " + std::to_string(y) + " outside [0, " +
                         std::to_string(pT) + "]");
    }
    if (y == 0.0) return 0.0;
    if (y >= pT) return f.T;
    double lo = 0.0;
    double hi = f.T;
    double t = y * (f.T / pT);
    for (int it = 0; it < 200; ++it) {
        const double r = f.psi(t) - y;
        if (r == 0.0) return t;
        if (r > 0.0) hi = t; else lo = t;
        const double d = f.psi_prime(t);
        double next = t - r / d;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(r) <= tol && std::abs(next - t) <= 4.0 * std::numeric_limits<double>::epsilon() * t) {
            return t;
        }
        if (next == t || hi - lo <= std::numeric_limits<double>::epsilon() * hi) {
            return std::abs(r) <= tol ? t : next;
        }
        t = next;
    }
    if (std::abs(f.psi(t) - y) <= tol) return t;
    throw NonConvergence("psi_inverse did not converge");
}

namespace {

FunctionSource compose(const FunctionSource& s, const PsiFunction& psi, const char* name) {
    if (auto c = s.constant_value()) return FunctionSource::constant(*c);
    if (!s.is_callable()) {
        throw ValidationError(std::string(name) + " must be a callable for a psi problem");
    }
    return FunctionSource([s, psi](double tau) { return s(psi_inverse(psi, tau)); });
}

// Image points this close to tau = 0 are evaluated exactly instead of
// interpolated: the solution behaves like tau^beta_0 there and a cubic
// interpolant loses accuracy.
constexpr std::size_t kExactCells = 64;

boost::math::interpolators::pchip<std::vector<double>> make_pchip(const GridFn& tilde) {
    const std::size_t n = tilde.size();
    const double ht = tilde.h();
    std::vector<double> x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = ht * static_cast<double>(k);
    std::vector<double> y(tilde.values().begin(), tilde.values().end());
    // Third-order one-sided slope at the right end; the default estimate is
    // only first order there.
    const double right = (11.0 * y[n - 1] - 18.0 * y[n - 2] + 9.0 * y[n - 3] - 2.0 * y[n - 4]) /
                         (6.0 * ht);
    return {std::move(x), std::move(y), std::numeric_limits<double>::quiet_NaN(), right};
}

// Node value when tau is a node, otherwise nullopt.
std::optional<double> at_node(const GridFn& tilde, double tau) {
    const double ht = tilde.h();
    const double idx = std::nearbyint(tau / ht);
    const auto i = static_cast<std::size_t>(idx);
    if (i < tilde.size() && ht * idx == tau) return tilde[i];
    return std::nullopt;
}

double clamp_tau(double tau, double top) { return std::min(std::max(tau, 0.0), top); }

// Interpolates tau-space samples onto tau_k = psi(t_k).
GridFn interpolate_at(const GridFn& tilde, const std::vector<double>& image, double T) {
    const auto interp = make_pchip(tilde);
    std::vector<double> out(image.size());
    for (std::size_t k = 0; k < image.size(); ++k) {
        const double tau = clamp_tau(image[k], tilde.T());
        const auto node = at_node(tilde, tau);
        out[k] = node ? *node : interp(tau);
    }
    out[0] = tilde[0];
    return GridFn(T, std::move(out));
}

// (I u)(x) for the piecewise-linear interpolant of u, integrated exactly
// against the kernel; x need not be a node.
double lift_at(const PrabIntParams& p, const GridFn& u, double x, const SeriesOptions& opt) {
    const double h = u.h();
    double sum = 0.0;
    for (std::size_t l = 0; l + 1 < u.size(); ++l) {
        const double a = h * static_cast<double>(l);
        if (a >= x) break;
        const double b = std::min(a + h, x);
        const double slope = (u[l + 1] - u[l]) / h;
        // s = x - r with r in [x - b, x - a]
        const double m0 = kernel_moment(p, x - b, x - a, 0, opt);
        const double m1 = kernel_moment(p, x - b, x - a, 1, opt);
        sum += (u[l] + slope * (x - a)) * m0 - slope * m1;
    }
    return sum;
}

// v = sum_j c_j tau^j/j! + I density, mapped onto tau_k = psi(t_k).
GridFn map_back(const GridFn& tilde, const GridFn& density, const std::vector<double>& taylor,
                const PrabIntParams& lift, const std::vector<double>& image, double T,
                const SeriesOptions& opt) {
    const auto interp = make_pchip(tilde);
    const double near = tilde.h() * static_cast<double>(kExactCells);
    std::vector<double> out(image.size());
    for (std::size_t k = 0; k < image.size(); ++k) {
        const double tau = clamp_tau(image[k], tilde.T());
        if (const auto node = at_node(tilde, tau)) {
            out[k] = *node;
        } else if (tau < near) {
            double v = lift_at(lift, density, tau, opt);
            double power = 1.0;
            for (std::size_t j = 0; j < taylor.size(); ++j) {
                if (j > 0) power *= tau / static_cast<double>(j);
                v += taylor[j] * power;
            }
            out[k] = v;
        } else {
            out[k] = interp(tau);
        }
    }
    out[0] = tilde[0];
    return GridFn(T, std::move(out));
}

std::vector<double> image_points(const PsiFunction& psi, std::size_t n) {
    std::vector<double> image(n);
    const double h = psi.T / static_cast<double>(n - 1);
    for (std::size_t k = 0; k < n; ++k) image[k] = psi.psi(h * static_cast<double>(k));
    image[0] = 0.0;
    return image;
}

}  // namespace

ProblemSpec tau_problem(const PsiProblemSpec& problem) {
    const auto& base = problem.base;
    const auto& psi = problem.psi;
    base.validate();
    psi.validate();
    if (base.T != psi.T) throw ValidationError("psi horizon must equal the problem horizon");
    ProblemSpec tp = base;
    tp.T = psi.psi(psi.T);
    tp.g = compose(base.g, psi, "g");
    for (std::size_t i = 0; i < base.sigmas.size(); ++i) {
        tp.sigmas[i] = compose(base.sigmas[i], psi, "sigma");
    }
    return tp;
}

GridFn pull_back(const PsiFunction& psi, const GridFn& on_tau_grid) {
    return interpolate_at(on_tau_grid, image_points(psi, on_tau_grid.size()), psi.T);
}

PsiSolveDetail solve_ivp_wrt_detailed(const PsiProblemSpec& problem, const SolveConfig& cfg) {
    cfg.validate();
    ProblemSpec tp = tau_problem(problem);
    IvpDetail detail = solve_ivp_detailed(tp, cfg);
    const Solution& tilde = detail.solution;
    const auto image = image_points(problem.psi, cfg.n_points);
    const double T = problem.base.T;
    const PrabIntParams lift{tp.alpha, tp.betas[0], tp.thetas[0], tp.omega};
    SeriesOptions opt;
    opt.tol = cfg.series_tol;

    Solution out{map_back(tilde.v, tilde.u, tp.e, lift, image, T, opt),
                 interpolate_at(tilde.u, image, T),
                 tilde.iterations,
                 tilde.final_update_norm,
                 tilde.residual_norm,
                 tilde.update_history,
                 std::nullopt};
    std::vector<GridFn> basis;
    for (std::size_t j = 0; j < detail.members.size(); ++j) {
        const auto& mj = detail.members[j];
        std::vector<double> unit(tp.e.size(), 0.0);
        unit[j] = 1.0;
        GridFn density = mj.u;
        for (double& x : density.values()) x = -x;
        basis.push_back(map_back(mj.v, density, unit, lift, image, T, opt));
    }
    out.canonical = std::move(basis);
    return {std::move(out), std::move(detail.solution), std::move(tp)};
}

Solution solve_ivp_wrt(const PsiProblemSpec& problem, const SolveConfig& cfg) {
    return solve_ivp_wrt_detailed(problem, cfg).t_space;
}

}  // namespace prab

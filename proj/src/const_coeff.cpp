#include "prab/const_coeff.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "prab/errors.hpp"
#include "prab/simd.hpp"
#include "prab/solver.hpp"

namespace prab {

namespace {

// Cells closer than this to the kernel origin use exact per-term moments; the
// rest use Gauss-Legendre, where the kernel is smooth on the cell.
constexpr std::size_t kNearCells = 16;

template <class F>
void for_each_composition(unsigned k, std::vector<unsigned>& parts, std::size_t pos, F&& visit) {
    if (pos + 1 == parts.size()) {
        parts[pos] = k;
        visit(parts);
        return;
    }
    for (unsigned i = 0; i <= k; ++i) {
        parts[pos] = i;
        for_each_composition(k - i, parts, pos + 1, visit);
    }
}

double factorial(std::size_t j) {
    double f = 1.0;
    for (std::size_t k = 2; k <= j; ++k) f *= static_cast<double>(k);
    return f;
}

struct GaussRule {
    std::array<double, 8> u;
    std::array<double, 8> w;
};

const GaussRule& unit_gauss() {
    static const GaussRule rule = [] {
        using G = boost::math::quadrature::gauss<double, 8>;
        GaussRule r{};
        const auto& x = G::abscissa();
        const auto& w = G::weights();
        for (std::size_t i = 0; i < 4; ++i) {
            r.u[2 * i] = 0.5 * (1.0 - x[i]);
            r.u[2 * i + 1] = 0.5 * (1.0 + x[i]);
            r.w[2 * i] = 0.5 * w[i];
            r.w[2 * i + 1] = 0.5 * w[i];
        }
        return r;
    }();
    return rule;
}

}  // namespace

ProblemSpec ConstProblem::to_problem_spec() const {
    ProblemSpec p;
    p.alpha = alpha;
    p.betas = betas;
    p.thetas.assign(betas.size(), theta);
    p.omega = omega;
    for (double s : sigmas) p.sigmas.push_back(FunctionSource::constant(s));
    p.g = g;
    p.e = e;
    p.T = T;
    return p;
}

void ConstProblem::validate() const {
    to_problem_spec().validate();
    if (!std::isfinite(theta)) throw ValidationError("theta must be finite");
    for (double s : sigmas) {
        if (!std::isfinite(s)) throw ValidationError("sigmas must be finite constants");
    }
}

double mv_kernel(const ConstProblem& p, std::size_t n, double s, const SeriesOptions& opt) {
    if (!(s > 0.0)) throw DomainError("mv_kernel needs s > 0");
    const double q = p.betas.at(0) + p.alpha * static_cast<double>(n);
    const double lead = std::pow(s, q - 1.0);
    const std::size_t m = p.sigmas.size();
    if (m == 0) return lead * rgamma(q);
    std::vector<double> mus(m);
    std::vector<double> zs(m);
    for (std::size_t i = 0; i < m; ++i) {
        mus[i] = p.betas[0] - p.betas[i + 1];
        zs[i] = -p.sigmas[i] * std::pow(s, mus[i]);
    }
    return lead * ml_multivariate({mus, q}, zs, opt);
}

namespace {

// Appends the layered multinomial expansion for one outer index n. Returns the
// summed |integral over (0, T]| of the added terms.
double append_layers(std::vector<PowerSeriesKernel::Term>& out, double coef_n, double q0,
                     std::size_t n, const std::vector<double>& mus,
                     const std::vector<double>& sigmas, double T, bool skip_k0,
                     const SeriesOptions& opt, unsigned& max_k) {
    const std::size_t m = mus.size();
    std::vector<unsigned> parts(m);
    double block_abs = 0.0;
    double prev_layer = -1.0;
    int quiet = 0;
    const unsigned cap = m == 0 ? 0U : static_cast<unsigned>(opt.layer_cap);
    for (unsigned k = 0; k <= cap; ++k) {
        if (k == 0 && skip_k0) continue;
        double layer_abs = 0.0;
        auto visit = [&](const std::vector<unsigned>& ks) {
            double log_w = std::lgamma(static_cast<double>(k) + 1.0);
            double sign = 1.0;
            double q = q0;
            for (std::size_t i = 0; i < m; ++i) {
                if (ks[i] == 0) continue;
                if (sigmas[i] == 0.0) return;
                log_w += static_cast<double>(ks[i]) * std::log(std::abs(sigmas[i])) -
                         std::lgamma(static_cast<double>(ks[i]) + 1.0);
                if (sigmas[i] > 0.0 && (ks[i] & 1U)) sign = -sign;  // (-sigma_i)^{k_i}
                q += mus[i] * static_cast<double>(ks[i]);
            }
            const double c = coef_n * sign * std::exp(log_w) * rgamma(q);
            if (c == 0.0) return;
            out.push_back({c, q, n, ks});
            layer_abs += std::abs(c) * std::pow(T, q) / q;
            for (unsigned ki : ks) max_k = std::max(max_k, ki);
        };
        if (m == 0) {
            visit(parts);
        } else {
            for_each_composition(k, parts, 0, visit);
        }
        block_abs += layer_abs;
        if (m == 0) break;
        const bool small = layer_abs <= opt.tol * block_abs;
        const bool decaying = prev_layer >= 0.0 && layer_abs <= 0.5 * prev_layer;
        quiet = (small && decaying) ? quiet + 1 : 0;
        if (quiet >= 2 || (layer_abs == 0.0 && k > 0)) return block_abs;
        prev_layer = layer_abs;
    }
    if (m == 0) return block_abs;
    throw NonConvergence("multinomial kernel layers did not converge within " +
                         std::to_string(opt.layer_cap) + " layers");
}

std::vector<double> mus_of(const ConstProblem& p) {
    std::vector<double> mus;
    for (std::size_t i = 1; i < p.betas.size(); ++i) mus.push_back(p.betas[0] - p.betas[i]);
    return mus;
}

}  // namespace

PowerSeriesKernel PowerSeriesKernel::solution_kernel(const ConstProblem& p,
                                                     const SeriesOptions& opt) {
    p.validate();
    PowerSeriesKernel K;
    K.base_ = p.betas[0];
    K.alpha_ = p.alpha;
    K.mu_ = mus_of(p);
    const bool single = p.theta == 0.0 || p.omega == 0.0;
    detail::TailRule tail(opt.tol);
    double total_abs = 0.0;
    double coef = 1.0;  // (theta)_n omega^n / n!
    for (std::size_t n = 0; n < opt.term_cap; ++n) {
        if (n > 0) {
            const double f = p.theta + static_cast<double>(n - 1);
            if (f == 0.0) return K;
            coef *= f * p.omega / static_cast<double>(n);
        }
        const double q0 = p.betas[0] + p.alpha * static_cast<double>(n);
        const double block =
            append_layers(K.terms_, coef, q0, n, K.mu_, p.sigmas, p.T, false, opt, K.max_k_);
        K.max_n_ = n;
        total_abs += block;
        if (single) return K;
        if (n > 0 && block == 0.0) return K;
        if (tail.push(block, total_abs)) return K;
    }
    throw NonConvergence("constant-coefficient kernel: outer series did not converge within " +
                         std::to_string(opt.term_cap) + " terms");
}

PowerSeriesKernel PowerSeriesKernel::resolvent_kernel(const ConstProblem& p,
                                                      const SeriesOptions& opt) {
    p.validate();
    PowerSeriesKernel K;
    K.base_ = 0.0;
    K.alpha_ = p.alpha;
    K.mu_ = mus_of(p);
    if (!K.mu_.empty()) {
        append_layers(K.terms_, 1.0, 0.0, 0, K.mu_, p.sigmas, p.T, true, opt, K.max_k_);
    }
    return K;
}

double PowerSeriesKernel::operator()(double s) const {
    if (!(s > 0.0)) throw DomainError("kernel evaluation needs s > 0");
    detail::CompensatedSum sum;
    for (const auto& t : terms_) sum.add(t.coef * std::pow(s, t.q - 1.0));
    return sum.value();
}

KernelWeights PowerSeriesKernel::weights(double h, std::size_t n_points) const {
    if (n_points < 2) throw DomainError("kernel weights need at least two points");
    const std::size_t cells_n = n_points - 1;
    std::vector<HatMoments> cells(cells_n, HatMoments{0.0, 0.0});
    if (terms_.empty()) return KernelWeights::from_cell_moments(h, cells);

    const std::size_t near = std::min(kNearCells, cells_n);
    for (std::size_t l = 0; l < near; ++l) {
        detail::CompensatedSum r;
        detail::CompensatedSum f;
        for (const auto& t : terms_) {
            const HatMoments pm = power_hat_moments(t.q, l, h);
            r.add(t.coef * pm.rising);
            f.add(t.coef * pm.falling);
        }
        cells[l] = {r.value(), f.value()};
    }
    if (near == cells_n) return KernelWeights::from_cell_moments(h, cells);

    // Far field: flatten the factored exponents for table-driven evaluation.
    const std::size_t m = mu_.size();
    const std::size_t nt = terms_.size();
    std::vector<double> coef(nt);
    std::vector<std::size_t> nidx(nt);
    std::vector<unsigned> kflat(nt * m);
    for (std::size_t e = 0; e < nt; ++e) {
        coef[e] = terms_[e].coef;
        nidx[e] = terms_[e].n;
        for (std::size_t i = 0; i < m; ++i) kflat[e * m + i] = terms_[e].k[i];
    }
    std::vector<double> pow_a(max_n_ + 1);
    std::vector<double> pow_mu(m * (max_k_ + 1));
    const auto& gr = unit_gauss();
    for (std::size_t l = near; l < cells_n; ++l) {
        double rise = 0.0;
        double fall = 0.0;
        for (std::size_t g = 0; g < 8; ++g) {
            const double s = (static_cast<double>(l) + gr.u[g]) * h;
            const double sa = std::pow(s, alpha_);
            pow_a[0] = 1.0;
            for (std::size_t n = 1; n <= max_n_; ++n) pow_a[n] = pow_a[n - 1] * sa;
            for (std::size_t i = 0; i < m; ++i) {
                const double sm = std::pow(s, mu_[i]);
                double* row = &pow_mu[i * (max_k_ + 1)];
                row[0] = 1.0;
                for (unsigned k = 1; k <= max_k_; ++k) row[k] = row[k - 1] * sm;
            }
            double acc = 0.0;
            for (std::size_t e = 0; e < nt; ++e) {
                double v = coef[e] * pow_a[nidx[e]];
                for (std::size_t i = 0; i < m; ++i) v *= pow_mu[i * (max_k_ + 1) + kflat[e * m + i]];
                acc += v;
            }
            const double K = acc * std::pow(s, base_ - 1.0);
            rise += gr.w[g] * K * gr.u[g];
            fall += gr.w[g] * K * (1.0 - gr.u[g]);
        }
        cells[l] = {h * rise, h * fall};
    }
    return KernelWeights::from_cell_moments(h, cells);
}

namespace {

SeriesOptions series_from(const SolveConfig& cfg) {
    SeriesOptions opt;
    opt.tol = cfg.series_tol;
    return opt;
}

}  // namespace

GridFn solve_const_homog_ic(const ConstProblem& problem, const SolveConfig& cfg) {
    problem.validate();
    cfg.validate();
    if (std::any_of(problem.e.begin(), problem.e.end(), [](double x) { return x != 0.0; })) {
        throw ValidationError("solve_const_homog_ic needs homogeneous initial values");
    }
    const std::size_t n = cfg.n_points;
    const double h = problem.T / static_cast<double>(n - 1);
    const auto W = PowerSeriesKernel::solution_kernel(problem, series_from(cfg)).weights(h, n);
    const GridFn g = problem.g.sample(problem.T, n);
    return GridFn(problem.T, W.apply(g.values()));
}

Solution solve_const_ivp(const ConstProblem& problem, const SolveConfig& cfg) {
    problem.validate();
    cfg.validate();
    const std::size_t n = cfg.n_points;
    const double T = problem.T;
    const double h = T / static_cast<double>(n - 1);
    const SeriesOptions opt = series_from(cfg);
    const auto W = PowerSeriesKernel::solution_kernel(problem, opt).weights(h, n);
    const auto R = PowerSeriesKernel::resolvent_kernel(problem, opt).weights(h, n);
    const VolterraSystem sys(problem.to_problem_spec(), cfg);

    const GridFn g = problem.g.sample(T, n);
    GridFn v(T, W.apply(g.values()));
    std::vector<GridFn> basis;
    for (std::size_t j = 0; j < problem.e.size(); ++j) {
        const double jf = factorial(j);
        GridFn vj = GridFn::sample(T, n, [&](double t) {
            return std::pow(t, static_cast<double>(j)) / jf;
        });
        const GridFn phi = sys.phi(j);
        if (sup_norm(phi.values()) != 0.0) {
            simd::axpy(-1.0, W.apply(phi.values()), vj.values());
        }
        if (problem.e[j] != 0.0) simd::axpy(problem.e[j], vj.values(), v.values());
        basis.push_back(std::move(vj));
    }
    const GridFn forcing = sys.effective_forcing();
    GridFn u = forcing;
    simd::axpy(1.0, R.apply(forcing.values()), u.values());

    Solution sol{std::move(v), std::move(u), 0, 0.0, 0.0, {}, std::move(basis)};
    sol.residual_norm = sys.residual(sol.u, forcing);
    return sol;
}

}  // namespace prab

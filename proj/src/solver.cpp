#include "prab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "prab/errors.hpp"
#include "prab/simd.hpp"

namespace prab {

namespace {

SeriesOptions series_from(const SolveConfig& cfg) {
    SeriesOptions opt;
    opt.tol = cfg.series_tol;
    return opt;
}

KernelWeights lower_weights(const ProblemSpec& p, std::size_t i, double h, std::size_t n,
                            const SeriesOptions& opt) {
    return KernelWeights({p.alpha, p.betas[0] - p.betas[i], p.thetas[0] - p.thetas[i], p.omega},
                         h, n, opt);
}

std::vector<KernelWeights> build_lower(const ProblemSpec& p, double h, std::size_t n,
                                       const SeriesOptions& opt) {
    std::vector<KernelWeights> out;
    out.reserve(p.m());
    for (std::size_t i = 1; i <= p.m(); ++i) out.push_back(lower_weights(p, i, h, n, opt));
    return out;
}

double factorial(std::size_t j) {
    double f = 1.0;
    for (std::size_t k = 2; k <= j; ++k) f *= static_cast<double>(k);
    return f;
}

bool all_zero(const std::vector<double>& e) {
    return std::all_of(e.begin(), e.end(), [](double x) { return x == 0.0; });
}

}  // namespace

VolterraSystem::VolterraSystem(const ProblemSpec& problem, const SolveConfig& cfg)
    : problem_(problem),
      cfg_(cfg),
      n_(cfg.n_points),
      T_(problem.T),
      series_(series_from(cfg)),
      lower_(build_lower(problem, problem.T / static_cast<double>(cfg.n_points - 1),
                         cfg.n_points, series_)),
      lift_({problem.alpha, problem.betas[0], problem.thetas[0], problem.omega},
            problem.T / static_cast<double>(cfg.n_points - 1), cfg.n_points, series_) {
    sigma_.reserve(problem_.m());
    for (const auto& s : problem_.sigmas) {
        sigma_.push_back(s.sample(T_, n_));
        auto& neg = neg_sigma_.emplace_back(sigma_.back().values().begin(),
                                            sigma_.back().values().end());
        for (double& x : neg) x = -x;
    }
}

void VolterraSystem::apply_lower(std::span<const double> u, std::span<double> out) const {
    if (u.size() != n_ || out.size() != n_) throw DimensionMismatch("apply_lower: grid size");
    std::fill(out.begin(), out.end(), 0.0);
    std::vector<double> tmp(n_);
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        lower_[i].apply(u, tmp);
        simd::mul_sub(neg_sigma_[i], tmp, out);  // out += sigma_i * tmp
    }
}

GridFn VolterraSystem::lift(const GridFn& u) const {
    if (u.size() != n_) throw DimensionMismatch("lift: grid size");
    return GridFn(T_, lift_.apply(u.values()));
}

PicardResult VolterraSystem::picard(const GridFn& forcing) const {
    if (forcing.size() != n_) throw DimensionMismatch("picard: forcing grid size");
    PicardResult r{forcing, 0, 0.0, {}};
    std::vector<double> ku(n_);
    std::vector<double> next(n_);
    const auto f = forcing.values();
    for (std::size_t it = 1; it <= cfg_.max_iters; ++it) {
        apply_lower(r.u.values(), ku);
        for (std::size_t k = 0; k < n_; ++k) next[k] = f[k] - ku[k];
        const double d = sup_distance(next, r.u.values());
        if (!std::isfinite(d)) {
            throw NonConvergence("Picard iteration diverged at iteration " + std::to_string(it));
        }
        std::copy(next.begin(), next.end(), r.u.values().begin());
        r.iterations = it;
        r.final_update_norm = d;
        r.update_history.push_back(d);
        if (d < cfg_.picard_tol) return r;
    }
    throw MaxItersExceeded("Picard iteration did not reach tolerance in " +
                               std::to_string(cfg_.max_iters) + " iterations (last update " +
                               std::to_string(r.final_update_norm) + ")",
                           r.final_update_norm);
}

GridFn VolterraSystem::phi(std::size_t j) const {
    const std::size_t n0 = problem_.n0();
    if (j >= n0) throw DomainError("phi_j needs j < n_0");
    const auto rho = compute_rho(problem_);
    GridFn out = GridFn::zeros(T_, n_);
    if (!rho[j]) return out;
    const double h = T_ / static_cast<double>(n_ - 1);
    for (std::size_t i = *rho[j]; i <= problem_.m(); ++i) {
        const auto s = sigma_[i - 1].values();
        for (std::size_t k = 0; k < n_; ++k) {
            if (s[k] == 0.0) continue;
            out[k] += s[k] * caputo_prabhakar_power(static_cast<int>(j), problem_.alpha,
                                                    problem_.betas[i], problem_.thetas[i],
                                                    problem_.omega, static_cast<double>(k) * h,
                                                    series_);
        }
    }
    return out;
}

GridFn VolterraSystem::effective_forcing() const {
    GridFn g = problem_.g.sample(T_, n_);
    for (std::size_t j = 0; j < problem_.e.size(); ++j) {
        if (problem_.e[j] == 0.0) continue;
        const GridFn p = phi(j);
        simd::axpy(-problem_.e[j], p.values(), g.values());
    }
    return g;
}

GridFn VolterraSystem::residual_pointwise(const GridFn& u, const GridFn& forcing) const {
    if (u.size() != n_ || forcing.size() != n_) throw DimensionMismatch("residual: grid size");
    std::vector<double> r(n_);
    apply_lower(u.values(), r);
    for (std::size_t k = 0; k < n_; ++k) r[k] = std::abs(u[k] + r[k] - forcing[k]);
    return GridFn(T_, std::move(r));
}

double VolterraSystem::residual(const GridFn& u, const GridFn& forcing) const {
    return sup_norm(residual_pointwise(u, forcing).values()) / (1.0 + sup_norm(forcing.values()));
}

std::vector<std::optional<std::size_t>> compute_rho(const ProblemSpec& problem) {
    const std::size_t n0 = problem.n0();
    std::vector<std::optional<std::size_t>> rho(n0);
    for (std::size_t j = 0; j < n0; ++j) {
        for (std::size_t i = 1; i <= problem.m(); ++i) {
            if (problem.betas[i] <= static_cast<double>(j)) {
                rho[j] = i;
                break;
            }
        }
    }
    return rho;
}

GridFn phi_j(const ProblemSpec& problem, std::size_t j, const SolveConfig& cfg) {
    problem.validate();
    cfg.validate();
    return VolterraSystem(problem, cfg).phi(j);
}

namespace {

Solution homogeneous(const VolterraSystem& sys) {
    const auto& p = sys.problem();
    const GridFn g = p.g.sample(sys.T(), sys.size());
    PicardResult r = sys.picard(g);
    GridFn v = sys.lift(r.u);
    Solution sol{std::move(v), std::move(r.u), r.iterations, r.final_update_norm, 0.0,
                 std::move(r.update_history), std::nullopt};
    sol.residual_norm = sys.residual(sol.u, g);
    return sol;
}

std::vector<CanonicalMember> canonical_on(const VolterraSystem& sys) {
    const auto& p = sys.problem();
    std::vector<CanonicalMember> out;
    const double T = sys.T();
    const std::size_t n = sys.size();
    for (std::size_t j = 0; j < p.n0(); ++j) {
        GridFn phi = sys.phi(j);
        const double jf = factorial(j);
        GridFn v = GridFn::sample(T, n, [&](double t) {
            return std::pow(t, static_cast<double>(j)) / jf;
        });
        if (sup_norm(phi.values()) == 0.0) {
            out.push_back({std::move(v), GridFn::zeros(T, n), std::move(phi), 0, 0.0});
            continue;
        }
        PicardResult r = sys.picard(phi);
        const GridFn lifted = sys.lift(r.u);
        simd::axpy(-1.0, lifted.values(), v.values());
        out.push_back({std::move(v), std::move(r.u), std::move(phi), r.iterations,
                       r.final_update_norm});
    }
    return out;
}

}  // namespace

Solution picard_solve(const ProblemSpec& problem, const SolveConfig& cfg) {
    problem.validate();
    cfg.validate();
    if (!all_zero(problem.e)) {
        throw ValidationError("picard_solve needs homogeneous initial values; use solve_ivp");
    }
    const VolterraSystem sys(problem, cfg);
    return homogeneous(sys);
}

std::vector<CanonicalMember> canonical_set(const ProblemSpec& problem, const SolveConfig& cfg) {
    problem.validate();
    cfg.validate();
    return canonical_on(VolterraSystem(problem, cfg));
}

std::vector<GridFn> canonical_solutions(const ProblemSpec& problem, const SolveConfig& cfg) {
    std::vector<GridFn> out;
    for (auto& c : canonical_set(problem, cfg)) out.push_back(std::move(c.v));
    return out;
}

IvpDetail solve_ivp_detailed(const ProblemSpec& problem, const SolveConfig& cfg) {
    problem.validate();
    cfg.validate();
    const VolterraSystem sys(problem, cfg);
    IvpDetail out{homogeneous(sys), canonical_on(sys)};
    Solution& sol = out.solution;
    std::vector<GridFn> basis;
    for (std::size_t j = 0; j < out.members.size(); ++j) {
        const auto& mj = out.members[j];
        const double ej = problem.e[j];
        if (ej != 0.0) {
            simd::axpy(ej, mj.v.values(), sol.v.values());
            simd::axpy(-ej, mj.u.values(), sol.u.values());
        }
        sol.iterations = std::max(sol.iterations, mj.iterations);
        sol.final_update_norm = std::max(sol.final_update_norm, mj.final_update_norm);
        basis.push_back(mj.v);
    }
    sol.canonical = std::move(basis);
    sol.residual_norm = sys.residual(sol.u, sys.effective_forcing());
    return out;
}

Solution solve_ivp(const ProblemSpec& problem, const SolveConfig& cfg) {
    return solve_ivp_detailed(problem, cfg).solution;
}

namespace {

VolterraSystem system_for(const ProblemSpec& problem, const Solution& sol, double series_tol) {
    if (sol.u.T() != problem.T) throw DimensionMismatch("solution horizon differs from problem");
    SolveConfig cfg;
    cfg.n_points = sol.u.size();
    cfg.series_tol = series_tol;
    return VolterraSystem(problem, cfg);
}

}  // namespace

double residual(const ProblemSpec& problem, const Solution& sol, double series_tol) {
    problem.validate();
    const VolterraSystem sys = system_for(problem, sol, series_tol);
    return sys.residual(sol.u, sys.effective_forcing());
}

GridFn residual_pointwise(const ProblemSpec& problem, const Solution& sol, double series_tol) {
    problem.validate();
    const VolterraSystem sys = system_for(problem, sol, series_tol);
    return sys.residual_pointwise(sol.u, sys.effective_forcing());
}

}  // namespace prab

#include "prab/oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "prab/errors.hpp"
#include "prab/fracops.hpp"

namespace prab {

namespace {

// Hat-function weights from raw kernel moments. Deliberately plain: the
// moment difference M1 - a M0 loses a few digits far from the origin, which
// the oracle can afford.
struct DenseWeights {
    std::vector<double> diag_and_body;  // w(d) for offsets d >= 0, columns k >= 1
    std::vector<double> first;          // w[j][0]
};

DenseWeights oracle_weights(const PrabIntParams& p, double h, std::size_t n, double quad_tol) {
    SeriesOptions opt;
    opt.tol = quad_tol;
    std::vector<double> rise(n - 1);
    std::vector<double> fall(n - 1);
    for (std::size_t l = 0; l + 1 < n; ++l) {
        const double a = h * static_cast<double>(l);
        const double b = h * static_cast<double>(l + 1);
        const double m0 = kernel_moment(p, a, b, 0, opt);
        const double m1 = kernel_moment(p, a, b, 1, opt);
        rise[l] = (m1 - a * m0) / h;
        fall[l] = (b * m0 - m1) / h;
    }
    DenseWeights w;
    w.diag_and_body.assign(n, 0.0);
    w.first.assign(n, 0.0);
    w.diag_and_body[0] = fall[0];
    for (std::size_t d = 1; d + 1 < n; ++d) w.diag_and_body[d] = rise[d - 1] + fall[d];
    for (std::size_t j = 1; j < n; ++j) w.first[j] = rise[j - 1];
    return w;
}

double row_sum(const DenseWeights& w, const std::vector<double>& u, std::size_t j,
               std::size_t upto) {
    // sum_{k < upto} w[j][k] u_k for row j >= 1
    double s = w.first[j] * u[0];
    for (std::size_t k = 1; k < upto; ++k) s += w.diag_and_body[j - k] * u[k];
    return s;
}

double factorial(std::size_t j) {
    double f = 1.0;
    for (std::size_t k = 2; k <= j; ++k) f *= static_cast<double>(k);
    return f;
}

}  // namespace

void OracleConfig::validate() const {
    if (n_points < 65) throw ValidationError("oracle n_points must be at least 65");
    if (!(quad_tol > 0.0)) throw ValidationError("oracle quad_tol must be positive");
}

Solution volterra_direct(const ProblemSpec& problem, const OracleConfig& cfg) {
    problem.validate();
    cfg.validate();
    const std::size_t n = cfg.n_points;
    const std::size_t m = problem.m();
    const double T = problem.T;
    const double h = T / static_cast<double>(n - 1);
    SeriesOptions opt;
    opt.tol = cfg.quad_tol;

    std::vector<std::vector<double>> sigma(m);
    std::vector<DenseWeights> W;
    for (std::size_t i = 1; i <= m; ++i) {
        const GridFn s = problem.sigmas[i - 1].sample(T, n);
        sigma[i - 1].assign(s.values().begin(), s.values().end());
        W.push_back(oracle_weights({problem.alpha, problem.betas[0] - problem.betas[i],
                                    problem.thetas[0] - problem.thetas[i], problem.omega},
                                   h, n, cfg.quad_tol));
    }
    const DenseWeights lift = oracle_weights(
        {problem.alpha, problem.betas[0], problem.thetas[0], problem.omega}, h, n, cfg.quad_tol);

    // Reduced forcing: the Caputo derivatives of the Taylor polynomial move to the right.
    const GridFn g0 = problem.g.sample(T, n);
    std::vector<double> rhs(g0.values().begin(), g0.values().end());
    for (std::size_t j = 0; j < problem.e.size(); ++j) {
        const double ej = problem.e[j];
        if (ej == 0.0) continue;
        for (std::size_t i = 1; i <= m; ++i) {
            // C-D^{beta_i} t^j/j! vanishes unless beta_i <= j.
            if (problem.betas[i] > static_cast<double>(j)) continue;
            for (std::size_t k = 0; k < n; ++k) {
                rhs[k] -= ej * sigma[i - 1][k] *
                          caputo_prabhakar_power(static_cast<int>(j), problem.alpha,
                                                 problem.betas[i], problem.thetas[i],
                                                 problem.omega, h * static_cast<double>(k), opt);
            }
        }
    }

    // Forward substitution on (I + sum_i diag(sigma_i) W_i) u = rhs.
    std::vector<double> u(n, 0.0);
    u[0] = rhs[0];
    for (std::size_t j = 1; j < n; ++j) {
        double off = 0.0;
        double diag = 1.0;
        for (std::size_t i = 0; i < m; ++i) {
            off += sigma[i][j] * row_sum(W[i], u, j, j);
            diag += sigma[i][j] * W[i].diag_and_body[0];
        }
        if (!std::isfinite(diag) || std::abs(diag) < 1e-300) {
            throw SingularDiagonal("oracle system has a singular diagonal at row " +
                                   std::to_string(j));
        }
        u[j] = (rhs[j] - off) / diag;
    }

    // Residual of the triangular system, recomputed independently of the sweep.
    double res = 0.0;
    double rhs_norm = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double r = u[j] - rhs[j];
        if (j > 0) {
            for (std::size_t i = 0; i < m; ++i) r += sigma[i][j] * row_sum(W[i], u, j, j + 1);
        }
        res = std::max(res, std::abs(r));
        rhs_norm = std::max(rhs_norm, std::abs(rhs[j]));
    }
    const double rel = res / (1.0 + rhs_norm);
    if (!(rel <= 1e-12)) {
        throw NonConvergence("oracle triangular residual " + std::to_string(rel) +
                             " exceeds 1e-12");
    }

    std::vector<double> v(n, 0.0);
    for (std::size_t j = 1; j < n; ++j) v[j] = row_sum(lift, u, j, j + 1);
    for (std::size_t j = 0; j < problem.e.size(); ++j) {
        const double jf = factorial(j);
        for (std::size_t k = 0; k < n; ++k) {
            v[k] += problem.e[j] * std::pow(h * static_cast<double>(k), static_cast<double>(j)) / jf;
        }
    }
    return Solution{GridFn(T, std::move(v)), GridFn(T, std::move(u)), 1, 0.0, rel, {}, std::nullopt};
}

}  // namespace prab

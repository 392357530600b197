#include "prab/problem.hpp"

#include <cmath>
#include <string>

#include "prab/errors.hpp"

namespace prab {

FunctionSource::FunctionSource(double c) : fn_([c](double) { return c; }), constant_(c) {}

FunctionSource FunctionSource::constant(double c) { return FunctionSource(c); }

double FunctionSource::operator()(double t) const {
    if (!fn_) throw ValidationError("tabulated function cannot be evaluated off its grid");
    return fn_(t);
}

GridFn FunctionSource::sample(double T, std::size_t n_points) const {
    if (table_) {
        if (table_->size() != n_points || table_->T() != T) {
            throw ValidationError("tabulated function has " + std::to_string(table_->size()) +
                                  " points on [0, " + std::to_string(table_->T()) +
                                  "], solver grid has " + std::to_string(n_points) +
                                  " points on [0, " + std::to_string(T) + "]");
        }
        return *table_;
    }
    return GridFn::sample(T, n_points, fn_);
}

std::size_t ProblemSpec::n0() const {
    if (betas.empty()) throw ValidationError("betas must not be empty");
    return static_cast<std::size_t>(std::floor(betas[0])) + 1;
}

void ProblemSpec::validate() const {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ValidationError("alpha must be positive");
    if (!std::isfinite(omega)) throw ValidationError("omega must be finite");
    if (betas.empty()) throw ValidationError("betas must not be empty");
    for (double b : betas) {
        if (!std::isfinite(b)) throw ValidationError("betas must be finite");
    }
    if (betas[0] == std::floor(betas[0])) throw ValidationError("beta_0 must be non-integer");
    for (std::size_t i = 1; i < betas.size(); ++i) {
        if (!(betas[i] < betas[i - 1])) throw ValidationError("betas must be strictly decreasing");
    }
    if (!(betas.back() >= 0.0)) throw ValidationError("beta_m must be nonnegative");
    if (thetas.size() != betas.size()) {
        throw ValidationError("thetas must have one entry per beta (" +
                              std::to_string(betas.size()) + "), got " +
                              std::to_string(thetas.size()));
    }
    for (double th : thetas) {
        if (!std::isfinite(th)) throw ValidationError("thetas must be finite");
    }
    if (sigmas.size() != m()) {
        throw ValidationError("sigmas must have m = " + std::to_string(m()) + " entries, got " +
                              std::to_string(sigmas.size()));
    }
    if (e.size() != n0()) {
        throw ValidationError("e must have n_0 = " + std::to_string(n0()) + " entries, got " +
                              std::to_string(e.size()));
    }
    for (double x : e) {
        if (!std::isfinite(x)) throw ValidationError("initial values must be finite");
    }
    if (!(T > 0.0) || !std::isfinite(T)) throw ValidationError("T must be positive");
}

void SolveConfig::validate() const {
    if (n_points < 33) throw ValidationError("n_points must be at least 33");
    if (!(picard_tol > 0.0)) throw ValidationError("picard_tol must be positive");
    if (!(series_tol > 0.0)) throw ValidationError("series_tol must be positive");
    if (max_iters == 0) throw ValidationError("max_iters must be positive");
}

}  // namespace prab

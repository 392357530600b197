#include <doctest.h>

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "prab/errors.hpp"
#include "prab/fracops.hpp"
#include "prab/oracle.hpp"
#include "prab/solver.hpp"
#include "prab/special.hpp"

using namespace prab;
using prab::test::max_abs_diff;

namespace {

OracleConfig oracle(std::size_t n) {
    OracleConfig c;
    c.n_points = n;
    return c;
}

ProblemSpec var_coeff() {
    ProblemSpec p;
    p.alpha = 1.2;
    p.omega = -0.5;
    p.betas = {2.3, 1.1, 0.4};
    p.thetas = {0.9, 0.4, -0.3};
    p.sigmas = {FunctionSource([](double t) { return std::sin(t); }),
                FunctionSource([](double t) { return 1 + t * t; })};
    p.g = FunctionSource([](double t) { return std::exp(-t); });
    p.e = {1.0, -0.3, 0.2};
    return p;
}

}  // namespace

TEST_CASE("oracle configuration and inputs") {
    CHECK_THROWS_AS(oracle(64).validate(), ValidationError);
    CHECK_NOTHROW(oracle(65).validate());
    auto p = var_coeff();
    p.g = FunctionSource(GridFn::zeros(1.0, 65));
    CHECK_THROWS_AS(volterra_direct(p, oracle(129)), ValidationError);
}

TEST_CASE("m = 0 is a plain integral") {
    ProblemSpec p;
    p.alpha = 0.8;
    p.omega = 0.6;
    p.betas = {0.45};
    p.thetas = {2.0};
    p.g = FunctionSource([](double t) { return std::cos(2 * t); });
    p.e = {0.0};
    const auto s = volterra_direct(p, oracle(257));
    const auto Ig = prabhakar_integral(p.g.sample(1.0, 257), {0.8, 0.45, 2.0, 0.6});
    CHECK(max_abs_diff(s.v.values(), Ig.values()) <= 1e-12);
}

TEST_CASE("triangular residual") {
    const auto s = volterra_direct(var_coeff(), oracle(513));
    CHECK(s.residual_norm <= 1e-12);
    CHECK(s.v[0] == 1.0);
}

TEST_CASE("relaxation benchmark") {
    ProblemSpec p;
    p.alpha = 1.0;
    p.betas = {0.6, 0.0};
    p.thetas = {0.0, 0.0};
    p.sigmas = {FunctionSource::constant(1.0)};
    p.g = FunctionSource::constant(0.0);
    p.e = {1.0};
    const auto s = volterra_direct(p, oracle(1025));
    double err = 0.0;
    for (std::size_t k = 0; k < 1025; ++k) {
        err = std::max(err, std::abs(s.v[k] - ml2(0.6, 1.0, -std::pow(s.v.t(k), 0.6))));
    }
    CHECK(err < 1e-4);
}

TEST_CASE("self-refinement order") {
    const auto p = var_coeff();
    const auto a = volterra_direct(p, oracle(129)).v;
    const auto b = volterra_direct(p, oracle(257)).v;
    const auto c = volterra_direct(p, oracle(513)).v;
    const double d1 = test::coarse_error(a, b);
    const double d2 = test::coarse_error(b, c);
    CHECK(std::log2(d1 / d2) >= 1.0);
}

TEST_CASE("oracle agrees with Picard") {
    const auto p = var_coeff();
    SolveConfig cfg;
    cfg.n_points = 257;
    const auto picard = solve_ivp(p, cfg);
    const auto ref = volterra_direct(p, oracle(1025));
    CHECK(test::coarse_error(picard.v, ref.v) <= 1e-4);
}

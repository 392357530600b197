#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "prab/errors.hpp"
#include "prab/fracops.hpp"
#include "prab/special.hpp"
#include "reference_values.hpp"

using namespace prab;
using prab::test::max_abs_diff;

namespace {

// I^theta_{alpha,beta,omega} 1 = t^beta E^theta_{alpha,beta+1}(omega t^alpha)
double integral_of_one(const PrabIntParams& p, double t) {
    return std::pow(t, p.beta) * ml3({p.alpha, p.beta + 1.0, p.theta}, p.omega * std::pow(t, p.alpha));
}

// I^theta_{alpha,beta,omega} t = t^(beta+1) E^theta_{alpha,beta+2}(omega t^alpha)
double integral_of_t(const PrabIntParams& p, double t) {
    return std::pow(t, p.beta + 1.0) *
           ml3({p.alpha, p.beta + 2.0, p.theta}, p.omega * std::pow(t, p.alpha));
}

}  // namespace

TEST_CASE("kernel and moments") {
    const PrabIntParams p{0.5, 0.7, 1.2, 0.3};
    CHECK(prabhakar_kernel(p, 0.2) ==
          doctest::Approx(std::pow(0.2, -0.3) * ml3({0.5, 0.7, 1.2}, 0.3 * std::sqrt(0.2))).epsilon(1e-15));
    CHECK(kernel_moment(p, 0.0, 0.1, 0) ==
          doctest::Approx(ref::kmom_a05_b07_t12_w03_0_01_d0).epsilon(1e-13));
    CHECK(kernel_moment(p, 0.0, 0.1, 1) ==
          doctest::Approx(ref::kmom_a05_b07_t12_w03_0_01_d1).epsilon(1e-13));
    CHECK(kernel_moment({1.2, 1.8, 0.4, -0.7}, 0.3, 0.5, 1) ==
          doctest::Approx(ref::kmom_a12_b18_t04_wm07_03_05_d1).epsilon(1e-13));
    CHECK(kernel_moment(p, 0.3, 0.3, 0) == 0.0);
    CHECK_THROWS_AS(kernel_moment(p, 0.0, 0.1, 2), DomainError);
    CHECK_THROWS_AS(kernel_moment(p, 0.2, 0.1, 0), DomainError);
}

TEST_CASE("power hat moments") {
    using boost::math::quadrature::gauss_kronrod;
    for (double q : {0.3, 0.9, 1.0, 1.7, 3.4}) {
        for (std::size_t l : {0u, 1u, 3u, 4u, 5u, 37u, 1000u, 100000u}) {
            const double h = 0.01;
            const auto m = power_hat_moments(q, l, h);
            const double L = static_cast<double>(l);
            // h^q ((L+1)^q - L^q) / q without cancellation
            const double total = l == 0 ? std::pow(h, q) / q
                                        : std::pow(h * L, q) * std::expm1(q * std::log1p(1.0 / L)) / q;
            CHECK(m.rising + m.falling == doctest::Approx(total).epsilon(1e-13));
            if (l > 0) {
                auto fr = [&](double u) { return std::pow(L + u, q - 1.0) * u; };
                const double r = gauss_kronrod<double, 31>::integrate(fr, 0.0, 1.0) * std::pow(h, q);
                CHECK(m.rising == doctest::Approx(r).epsilon(1e-13));
            } else {
                CHECK(m.rising == doctest::Approx(std::pow(h, q) / (q + 1.0)).epsilon(1e-14));
            }
        }
    }
}

TEST_CASE("hat moments of the full kernel") {
    const PrabIntParams p{0.8, 0.4, 0.6, -0.9};
    const double h = 1.0 / 64.0;
    for (std::size_t l : {0u, 1u, 10u, 63u}) {
        const auto m = hat_moments(p, h, l);
        const double a = h * static_cast<double>(l);
        const double b = a + h;
        CHECK(m.rising + m.falling == doctest::Approx(kernel_moment(p, a, b, 0)).epsilon(1e-13));
        const double rising = (kernel_moment(p, a, b, 1) - a * kernel_moment(p, a, b, 0)) / h;
        CHECK(m.rising == doctest::Approx(rising).epsilon(1e-10));
    }
}

TEST_CASE("weights structure") {
    const PrabIntParams p{0.6, 0.35, 0.8, 0.5};
    const std::size_t n = 65;
    const double h = 1.0 / 64.0;
    const KernelWeights w(p, h, n);
    for (std::size_t k = 0; k < n; ++k) CHECK(w.weight(0, k) == 0.0);
    for (std::size_t j = 0; j < n; j += 7) {
        for (std::size_t k = j + 1; k < n; ++k) CHECK(w.weight(j, k) == 0.0);
    }
    // Row sums integrate the constant 1 exactly.
    for (std::size_t j = 1; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k <= j; ++k) s += w.weight(j, k);
        CHECK(s == doctest::Approx(integral_of_one(p, h * static_cast<double>(j))).epsilon(1e-13));
    }
    // Arbitrary-kernel construction from the same cell moments gives the same weights.
    std::vector<HatMoments> cells;
    for (std::size_t l = 0; l + 1 < n; ++l) cells.push_back(hat_moments(p, h, l));
    const auto w2 = KernelWeights::from_cell_moments(h, cells);
    for (std::size_t j = 0; j < n; j += 5) {
        for (std::size_t k = 0; k <= j; ++k) CHECK(w2.weight(j, k) == w.weight(j, k));
    }
    std::vector<double> wrong(n + 1, 1.0);
    CHECK_THROWS_AS(w.apply(wrong), DimensionMismatch);
}

TEST_CASE("prabhakar_integral reproduces linear functions exactly") {
    for (const PrabIntParams p : {PrabIntParams{0.5, 0.7, 1.2, 0.3}, PrabIntParams{1.3, 1.6, -0.4, -1.1},
                                  PrabIntParams{1.0, 0.2, 2.0, 0.7}}) {
        const auto one = GridFn::sample(1.5, 257, [](double) { return 1.0; });
        const auto lin = GridFn::sample(1.5, 257, [](double t) { return t; });
        const auto I1 = prabhakar_integral(one, p);
        const auto It = prabhakar_integral(lin, p);
        CHECK(I1[0] == 0.0);
        for (std::size_t k = 1; k < 257; ++k) {
            CHECK(std::abs(I1[k] - integral_of_one(p, I1.t(k))) <= 1e-13);
            CHECK(std::abs(It[k] - integral_of_t(p, It.t(k))) <= 1e-13);
        }
    }
}

TEST_CASE("linearity, zero start and the Riemann-Liouville limit") {
    std::mt19937_64 rng(5);
    const auto f = GridFn::sample(1.0, 401, test::SmoothFn::random(rng));
    const auto g = GridFn::sample(1.0, 401, test::SmoothFn::random(rng));
    std::vector<double> comb(401);
    for (std::size_t k = 0; k < 401; ++k) comb[k] = 2.5 * f[k] - 0.75 * g[k];
    const PrabIntParams p{0.9, 0.45, 1.7, -0.6};
    const auto If = prabhakar_integral(f, p);
    const auto Ig = prabhakar_integral(g, p);
    const auto Ic = prabhakar_integral(GridFn(1.0, comb), p);
    CHECK(If[0] == 0.0);
    for (std::size_t k = 0; k < 401; ++k) CHECK(std::abs(Ic[k] - (2.5 * If[k] - 0.75 * Ig[k])) <= 1e-12);

    for (double mu : {0.3, 1.0, 1.8}) {
        const auto rl = rl_integral(f, mu);
        const auto w0 = prabhakar_integral(f, {0.7, mu, 1.9, 0.0});
        const auto t0 = prabhakar_integral(f, {0.7, mu, 0.0, 2.3});
        CHECK(max_abs_diff(rl.values(), w0.values()) <= 1e-13);
        CHECK(max_abs_diff(rl.values(), t0.values()) <= 1e-13);
    }
    CHECK_THROWS_AS(prabhakar_integral(f, {0.0, 0.5, 1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(prabhakar_integral(f, {1.0, 0.0, 1.0, 0.0}), DomainError);
}

TEST_CASE("semigroup under refinement") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.2, 1.2);
    for (int trial = 0; trial < 3; ++trial) {
        const double alpha = 0.4 + u(rng), omega = u(rng) - 0.7;
        const PrabIntParams p1{alpha, u(rng), u(rng), omega};
        const PrabIntParams p2{alpha, u(rng), u(rng) - 0.5, omega};
        const PrabIntParams p12{alpha, p1.beta + p2.beta, p1.theta + p2.theta, omega};
        const auto fn = test::SmoothFn::random(rng);
        std::vector<double> errs;
        for (std::size_t n : {129u, 257u, 513u}) {
            const auto f = GridFn::sample(1.0, n, fn);
            const auto lhs = prabhakar_integral(prabhakar_integral(f, p2), p1);
            const auto rhs = prabhakar_integral(f, p12);
            errs.push_back(max_abs_diff(lhs.values(), rhs.values()));
        }
        for (double o : test::orders(errs)) CHECK(o >= 1.0);
    }
}

TEST_CASE("caputo_prabhakar_power") {
    CHECK(caputo_prabhakar_power(1, 0.5, 0.3, 2.0, 0.4, 0.8) ==
          doctest::Approx(ref::cpp_j1_a05_b03_t2_w04_t08).epsilon(1e-13));
    CHECK(caputo_prabhakar_power(2, 0.7, 1.4, 0.6, -0.3, 0.5) ==
          doctest::Approx(ref::cpp_j2_a07_b14_t06_wm03_t05).epsilon(1e-13));
    CHECK(caputo_prabhakar_power(2, 1.0, 0.4, 1.5, 0.2, 0.7) ==
          doctest::Approx(ref::cpp_j2_a10_b04_t15_w02_t07).epsilon(1e-13));
    CHECK(caputo_prabhakar_power(2, 0.7, 1.4, 0.6, -0.3, 0.0) == 0.0);
    CHECK(caputo_prabhakar_power(1, 0.7, 1.0, 0.6, -0.3, 0.0) == 1.0);
    CHECK_THROWS_AS(caputo_prabhakar_power(0, 0.7, 0.4, 0.6, -0.3, 0.0), DomainError);
    // theta = 0: plain power rule.
    CHECK(caputo_prabhakar_power(1, 1.0, 0.3, 0.0, 0.9, 0.6) ==
          doctest::Approx(std::pow(0.6, 0.7) * rgamma(1.7)).epsilon(1e-15));
}

TEST_CASE("caputo_prabhakar_derivative") {
    const std::size_t n = 1025;
    const auto lin = GridFn::sample(1.0, n, [](double t) { return t; });
    const auto one = GridFn::sample(1.0, n, [](double) { return 1.0; });
    const auto zero = GridFn::zeros(1.0, n);
    const auto d = caputo_prabhakar_derivative(lin, one, {1.0, 0.35, 0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k) {
        CHECK(std::abs(d[k] - std::pow(d.t(k), 0.65) * rgamma(1.65)) <= 1e-13);
    }
    const auto dc = caputo_prabhakar_derivative(one, zero, {0.7, 0.6, 1.1, 0.4});
    CHECK(sup_norm(dc.values()) == 0.0);

    // Derivative of t^2/2 from its first derivative agrees with the closed form.
    const PrabDerivParams p{0.8, 0.4, 1.5, 0.2};
    CHECK(p.order() == 1);
    std::vector<double> errs;
    for (std::size_t m : {129u, 257u, 513u}) {
        const auto f = GridFn::sample(1.0, m, [](double t) { return 0.5 * t * t; });
        const auto df = GridFn::sample(1.0, m, [](double t) { return t; });
        const auto D = caputo_prabhakar_derivative(f, df, p);
        double e = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            e = std::max(e, std::abs(D[k] - caputo_prabhakar_power(2, p.alpha, p.beta, p.theta,
                                                                   p.omega, D.t(k))));
        }
        errs.push_back(e);
    }
    CHECK(errs.back() <= 1e-12);
    CHECK_THROWS_AS(caputo_prabhakar_derivative(one, GridFn::zeros(1.0, 9), p), DimensionMismatch);
}

TEST_CASE("finite differences") {
    std::vector<double> errs;
    for (std::size_t n : {65u, 129u, 257u}) {
        const auto f = GridFn::sample(1.0, n, [](double t) { return std::sin(2 * t); });
        const auto d1 = finite_difference(f, 1);
        double e = 0.0;
        for (std::size_t k = 0; k < n; ++k) e = std::max(e, std::abs(d1[k] - 2 * std::cos(2 * d1.t(k))));
        errs.push_back(e);
    }
    for (double o : test::orders(errs)) CHECK(o >= 1.8);
    const auto f = GridFn::sample(1.0, 65, [](double t) { return t * t; });
    const auto d2 = finite_difference(f, 2);
    for (std::size_t k = 0; k < 65; ++k) CHECK(d2[k] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(finite_difference(f, 0)[7] == f[7]);
}

TEST_CASE("operator identities under refinement") {
    std::mt19937_64 rng(23);
    const auto fn = test::SmoothFn::random(rng);
    auto t2f = [&](double t) { return t * t * fn(t); };

    // Inversion: the Caputo-type derivative undoes the integral.
    const PrabIntParams p{0.8, 0.55, 0.9, -0.4};
    std::vector<double> inv;
    // Identity: I(C-D f) = f - f(0) for beta in (0, 1),
    // f - f(0) - f'(0) t for beta in (1, 2).
    std::vector<double> id1, id2;
    auto f = [](double t) { return std::sin(2 * t) + std::exp(0.5 * t); };
    auto f1 = [](double t) { return 2 * std::cos(2 * t) + 0.5 * std::exp(0.5 * t); };
    auto f2 = [](double t) { return -4 * std::sin(2 * t) + 0.25 * std::exp(0.5 * t); };
    for (std::size_t n : {257u, 513u, 1025u}) {
        const auto g = GridFn::sample(1.0, n, t2f);
        const auto F = prabhakar_integral(g, p);
        const auto D = caputo_prabhakar_derivative(F, finite_difference(F, 1),
                                                   {p.alpha, p.beta, p.theta, p.omega});
        double e = 0.0;
        for (std::size_t k = 1; k + 1 < n; ++k) e = std::max(e, std::abs(D[k] - g[k]));
        inv.push_back(e);

        const auto fg = GridFn::sample(1.0, n, f);
        const PrabDerivParams d1{0.7, 0.45, 1.3, 0.5};
        const auto I1 = prabhakar_integral(caputo_prabhakar_derivative(fg, GridFn::sample(1.0, n, f1), d1),
                                           {d1.alpha, d1.beta, d1.theta, d1.omega});
        const PrabDerivParams d2{1.1, 1.35, 0.6, -0.8};
        const auto I2 = prabhakar_integral(caputo_prabhakar_derivative(fg, GridFn::sample(1.0, n, f2), d2),
                                           {d2.alpha, d2.beta, d2.theta, d2.omega});
        double e1 = 0.0, e2 = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double t = fg.t(k);
            e1 = std::max(e1, std::abs(I1[k] - (f(t) - f(0))));
            e2 = std::max(e2, std::abs(I2[k] - (f(t) - f(0) - f1(0) * t)));
        }
        id1.push_back(e1);
        id2.push_back(e2);
    }
    for (double o : test::orders(inv)) CHECK(o >= 1.0);
    for (double o : test::orders(id1)) CHECK(o >= 1.0);
    for (double o : test::orders(id2)) CHECK(o >= 1.0);
    CHECK(inv.back() < 1e-3);
    CHECK(id1.back() < 1e-3);
    CHECK(id2.back() < 1e-3);
}

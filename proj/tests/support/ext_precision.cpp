#include "ext_precision.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace prab::testing {

namespace {

Big rgamma_big(const Big& x) {
    // Poles give 1/Gamma = 0.
    if (x <= 0 && x == floor(x)) return Big(0);
    return 1 / boost::math::tgamma(x);
}

}  // namespace

MLSeriesExt::MLSeriesExt(double alpha, double beta, double theta, int terms) {
    Big poch = 1;
    Big fact = 1;
    for (int n = 0; n < terms; ++n) {
        if (n > 0) {
            poch *= Big(theta) + (n - 1);
            fact *= n;
        }
        coef_.push_back(poch / fact * rgamma_big(Big(alpha) * n + Big(beta)));
    }
}

Big MLSeriesExt::eval(const Big& z) const {
    Big sum = 0;
    Big zn = 1;
    for (const auto& c : coef_) {
        sum += c * zn;
        zn *= z;
    }
    return sum;
}

double MLSeriesExt::operator()(double z) const { return static_cast<double>(eval(Big(z))); }

double ml3_ext(double alpha, double beta, double theta, double z, int terms) {
    return MLSeriesExt(alpha, beta, theta, terms)(z);
}

double ml_mv2_ext(double a1, double a2, double beta, double z1, double z2, int kmax) {
    Big sum = 0;
    const Big Z1(z1);
    const Big Z2(z2);
    for (int k1 = 0; k1 <= kmax; ++k1) {
        for (int k2 = 0; k2 <= kmax; ++k2) {
            // multinomial (k1+k2)! / (k1! k2!)
            const Big w = boost::math::tgamma(Big(k1 + k2 + 1)) /
                          (boost::math::tgamma(Big(k1 + 1)) * boost::math::tgamma(Big(k2 + 1)));
            sum += w * pow(Z1, k1) * pow(Z2, k2) *
                   rgamma_big(Big(beta) + Big(a1) * k1 + Big(a2) * k2);
        }
    }
    return static_cast<double>(sum);
}

double kernel_moment_ext(double alpha, double beta, double theta, double omega, double lo,
                         double hi, int degree) {
    const MLSeriesExt E(alpha, beta, theta, 120);
    const Big a(alpha);
    const Big b(beta);
    const Big w(omega);
    auto f = [&](const Big& tau) {
        return pow(tau, b - 1 + degree) * E.eval(w * pow(tau, a));
    };
    boost::math::quadrature::tanh_sinh<Big> integrator(15);
    const Big tol("1e-40");
    return static_cast<double>(integrator.integrate(f, Big(lo), Big(hi), tol));
}

double caputo_power_ext(int j, double alpha, double beta, double theta, double omega, double t,
                        int terms) {
    const Big e = Big(j) - Big(beta);
    const MLSeriesExt E(alpha, static_cast<double>(e + 1), -theta, terms);
    const Big T(t);
    return static_cast<double>(pow(T, e) * E.eval(Big(omega) * pow(T, Big(alpha))));
}

double mv_kernel1_ext(double alpha, double beta0, double beta1, double sigma, int n, double s,
                      int kmax) {
    const Big mu = Big(beta0) - Big(beta1);
    const Big q = Big(beta0) + Big(alpha) * n;
    const Big S(s);
    Big sum = 0;
    for (int k = 0; k <= kmax; ++k) {
        sum += pow(Big(-sigma) * pow(S, mu), k) * rgamma_big(mu * k + q);
    }
    return static_cast<double>(pow(S, q - 1) * sum);
}

}  // namespace prab::testing

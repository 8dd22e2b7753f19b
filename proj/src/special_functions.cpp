#include "special_functions.hpp"

#include <cmath>
#include <stdexcept>

#include "quadrature.hpp"

namespace nld {

namespace {

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// Plain series sum of 1F1(alpha, beta; z). Converges for all z; usable
// in practice when cancellation is mild (z bounded below).
double series_1f1(double alpha, double beta, double z, double tol) {
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 10000; ++k) {
        term *= (alpha + k) / (beta + k) * z / (k + 1);
        sum += term;
        if (std::abs(term) <= tol * std::abs(sum)) return sum;
        if (term == 0.0) return sum;
    }
    throw std::runtime_error("kummer_1f1: series did not converge");
}

// Large negative argument: 1F1(a,b;z) ~ Gamma(b)/Gamma(b-a) (-z)^{-a}
// sum_s (a)_s (a-b+1)_s / (s! (-z)^s). Asymptotic, truncated at the
// smallest term.
double asymptotic_neg_1f1(double alpha, double beta, double z, double tol) {
    double w = -z;
    double term = 1.0, sum = 1.0;
    double prev = std::abs(term);
    for (int s = 0; s < 300; ++s) {
        term *= (alpha + s) * (alpha - beta + 1 + s) / ((s + 1) * w);
        if (std::abs(term) >= prev) break;  // divergent tail reached
        sum += term;
        prev = std::abs(term);
        if (std::abs(term) <= tol * std::abs(sum)) break;
    }
    return gamma_fn(beta) / gamma_fn(beta - alpha) * std::pow(w, -alpha) * sum;
}

}  // namespace

double gamma_fn(double x) {
    static const double g = 7.0;
    static const double c[9] = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    if (x < 0.5) {
        if (x == std::floor(x)) throw std::domain_error("gamma_fn: pole");
        return M_PI / (std::sin(M_PI * x) * gamma_fn(1.0 - x));
    }
    x -= 1.0;
    double a = c[0];
    double t = x + g + 0.5;
    for (int i = 1; i < 9; ++i) a += c[i] / (x + i);
    return std::sqrt(2.0 * M_PI) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

double kummer_1f1(double alpha, double beta, double z, double tol, double z_switch) {
    if (is_nonpositive_integer(beta))
        throw std::domain_error("kummer_1f1: beta is a nonpositive integer");
    if (!(tol > 0) || !(z_switch > 0))
        throw std::invalid_argument("kummer_1f1: tol and z_switch must be positive");
    if (z == 0.0) return 1.0;
    if (alpha == beta) return std::exp(z);
    // Terminating polynomial case via the Kummer transform.
    if (is_nonpositive_integer(beta - alpha))
        return std::exp(z) * series_1f1(beta - alpha, beta, -z, tol);
    if (z > 0.0) return series_1f1(alpha, beta, z, tol);
    if (-z <= z_switch) return std::exp(z) * series_1f1(beta - alpha, beta, -z, tol);
    return asymptotic_neg_1f1(alpha, beta, z, tol);
}

double euler_integral_1f1(double alpha, double beta, double z) {
    if (!(alpha > 0.0) || !(beta > alpha))
        throw std::domain_error("euler_integral_1f1: requires 0 < alpha < beta");
    // Split off the t = 1 endpoint analytically: with g(t) = e^{zt} t^{alpha-1},
    //   int_0^1 g(t)(1-t)^{beta-alpha-1} dt
    //     = int_0^1 [g(t)-g(1)](1-t)^{beta-alpha-1} dt + g(1)/(beta-alpha).
    // The subtracted integrand is O((1-t)^{beta-alpha}) at t = 1, so the
    // quadrature never has to resolve the bare singularity there. This keeps
    // the oracle accurate even when beta - alpha is tiny and the weight's
    // mass concentrates at scales below machine resolution.
    double eps = beta - alpha;
    double g1 = std::exp(z);
    double integral = tanh_sinh_01([&](double t) {
        double g = std::exp(z * t) * std::pow(t, alpha - 1.0);
        return (g - g1) * std::pow(1.0 - t, eps - 1.0);
    });
    integral += g1 / eps;
    return gamma_fn(beta) / (gamma_fn(eps) * gamma_fn(alpha)) * integral;
}

}  // namespace nld

#include "profile.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fit.hpp"
#include "special_functions.hpp"

namespace nld {

void ProfileSpec::validate() const {
    if (!(mu >= 0.0) || !(mu < 1.0))
        throw std::domain_error("ProfileSpec: mu must lie in [0, 1)");
    if (!(eps_series > 0.0)) throw std::domain_error("ProfileSpec: eps_series must be positive");
    if (!(z_switch > 0.0)) throw std::domain_error("ProfileSpec: z_switch must be positive");
}

double f_mu(const ProfileSpec& spec, double xi) {
    spec.validate();
    if (!(xi >= 0.0)) throw std::domain_error("f_mu: xi must be nonnegative");
    if (spec.mu == 0.0) return std::sin(xi);
    double z = -0.5 * spec.mu * xi * xi;
    return xi * kummer_1f1(0.5 / spec.mu, 1.5, z, spec.eps_series, spec.z_switch);
}

double f_mu_tail_exponent(const ProfileSpec& spec, double xi_lo, double xi_hi, int samples) {
    spec.validate();
    if (!(xi_lo > 1.0) || !(xi_hi > xi_lo))
        throw std::domain_error("f_mu_tail_exponent: need 1 < xi_lo < xi_hi");
    if (samples < 2) throw std::invalid_argument("f_mu_tail_exponent: samples < 2");

    std::vector<double> lx(samples), lf(samples);
    double r = std::log(xi_hi / xi_lo) / (samples - 1);
    for (int i = 0; i < samples; ++i) {
        double xi = xi_lo * std::exp(i * r);
        double f = f_mu(spec, xi);
        if (!(f > 0.0))
            throw std::domain_error("f_mu_tail_exponent: f_mu nonpositive in window");
        lx[i] = std::log(xi);
        lf[i] = std::log(f);
    }
    return fit_line(lx, lf).slope;
}

double attractor(const AttractorParams& params, double x) {
    if (!(params.a > 0.0)) throw std::domain_error("attractor: a must be positive");
    if (!(params.m1 > 0.0)) throw std::domain_error("attractor: m1 must be positive");
    return params.m1 * x / (2.0 * std::sqrt(M_PI) * std::pow(params.a, 1.5)) *
           std::exp(-x * x / (4.0 * params.a));
}

}  // namespace nld

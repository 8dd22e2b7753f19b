#pragma once

namespace nld {

// Evaluation controls for the self-similar profile family f_mu,
//   f_mu(xi) = xi 1F1(1/(2 mu), 3/2; -(mu/2) xi^2),  f_0(xi) = sin(xi),
// normalized so that f_mu'(0) = 1.
struct ProfileSpec {
    double mu = 1.0 / 3.0;        // similarity exponent, in [0, 1)
    double eps_series = 1e-14;    // series termination tolerance
    double z_switch = 30.0;       // |z| beyond which the asymptotic branch is used

    void validate() const;
};

double f_mu(const ProfileSpec& spec, double xi);

// Least-squares slope of log f_mu vs log xi over [xi_lo, xi_hi];
// approaches 1 - 1/mu for mu in (1/3, 1).
double f_mu_tail_exponent(const ProfileSpec& spec, double xi_lo, double xi_hi,
                          int samples = 64);

// Large-time attractor profile m1 x / (2 sqrt(pi) a^{3/2}) e^{-x^2/(4a)}.
struct AttractorParams {
    double m1 = 0.0;  // conserved first moment, > 0
    double a = 0.0;   // current time-rescaling value, > 0
};

double attractor(const AttractorParams& params, double x);

}  // namespace nld

#pragma once

#include <span>
#include <vector>

#include "density_field.hpp"
#include "mass_ode.hpp"

namespace nld {

struct SlopeFit {
    double t_lo = 0.0;
    double t_hi = 0.0;
    double slope = 0.0;
    double intercept = 0.0;
    double residual_rms = 0.0;
    long count = 0;
};

// OLS on (log t, log value) restricted to [t_lo, t_hi]. Requires at least
// 10 in-window samples spanning a decade, all positive.
SlopeFit loglog_slope(std::span<const double> t, std::span<const double> value,
                      double t_lo, double t_hi);

struct CollapseReport {
    std::vector<double> times;
    std::vector<double> distances;  // sup_eta |a u(t, eta sqrt(a)) - profile(eta)|
    double fitted_exponent = 0.0;
};

// Rescaled sup-distance to the attractor profile (M1/(2 sqrt(pi))) eta e^{-eta^2/4},
// with eta = x / sqrt(a(t)); u is interpolated onto the eta-grid (monotone cubic).
CollapseReport collapse(const std::vector<DensityField>& fields,
                        const TimeRescaling& rescaling, double m1,
                        double eta_max = 10.0, int n_eta = 400);

// Sup over the grid of |u - attractor| with bandwidth a.
double attractor_error(const DensityField& field, double a, double m1);
double attractor_error(const DensityField& field, const TimeRescaling& rescaling,
                       double m1);

// Numerical estimate of sup |Phi(X, Y)| / Y over [0,x_max] x (0,y_max],
// Phi(X,Y) = [e^{-(X-Y)^2/4} - e^{-(X+Y)^2/4}]/Y - X e^{-X^2/4}.
double phi_kernel_bound(double x_max, double y_max, double spacing);

// Stable pointwise evaluation of Phi.
double phi_kernel(double x, double y);

}  // namespace nld

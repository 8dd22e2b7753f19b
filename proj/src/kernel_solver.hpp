#pragma once

#include <span>

#include "density_field.hpp"
#include "mass_ode.hpp"

namespace nld {

struct KernelQuadrature {
    int nodes_per_panel = 64;
    double kappa = 8.0;  // tail cutoff in units of sqrt(4a)
};

// Evaluates u(t,x) = (4 pi a)^{-1/2} int_0^inf u_in(y)
//   [e^{-(x-y)^2/4a} - e^{-(x+y)^2/4a}] dy with a = a(t) from the mass ODE.
// The kernel pair is evaluated as e^{-(x-y)^2/4a} (1 - e^{-xy/a}), which is
// exact at x = 0 and positive for x, y > 0.
class KernelRun {
public:
    KernelRun(InitialCondition ic, TimeRescaling rescaling, Grid1D grid,
              KernelQuadrature quad = {});

    DensityField evaluate(double t) const;
    double evaluate_at(double t, double x) const;

    // d_x u(t, 0) = G(a(t)); cross-module identity with the mass ODE.
    double flux_at_origin(double t) const;

    // max over times of |quadrature mass of u(t,.) - M(t)| / M(t).
    double self_consistency_residual(std::span<const double> times) const;

    const TimeRescaling& rescaling() const { return rescaling_; }
    const Grid1D& grid() const { return grid_; }

private:
    double integrate_point(double x, double a) const;

    InitialCondition ic_;
    TimeRescaling rescaling_;
    Grid1D grid_;
    KernelQuadrature quad_;
    MassOde mass_ode_;
};

}  // namespace nld

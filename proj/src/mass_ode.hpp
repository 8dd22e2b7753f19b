#pragma once

#include <vector>

#include "initial_condition.hpp"
#include "ode.hpp"

namespace nld {

// The monotone time rescaling a(t) = int_0^t M(s) ds as a sampled
// trajectory, with M(t) = a'(t). Immutable once solved.
struct TimeRescaling {
    OdeTrajectory trajectory;  // y = a, dy = M
    double m0 = 0.0;
    bool degenerate = false;  // zero-mass data: a identically zero

    double a_at(double t) const { return trajectory.eval(t); }
    double mass_at(double t) const { return trajectory.eval_derivative(t); }
    double t_end() const { return trajectory.t.back(); }
};

// Predicted large-time constants for admissible data:
//   a(t) ~ c t^{2/3},  M(t) ~ (2/3) c t^{-1/3},  c = (3 M1 / (2 sqrt(pi)))^{2/3}.
struct AsymptoticConstants {
    double c = 0.0;
};

// Scalar integro-differential problem for a(t): first-order form
// a' = M(0) - F(a), a(0) = 0, with F the primitive of
// G(a) = (1/(2 sqrt(pi))) a^{-3/2} int_0^inf s e^{-s^2/(4a)} u_in(s) ds.
//
// F is tabulated once per initial condition on a geometric a-grid and
// interpolated with cubic Hermite segments using the exact derivative
// F' = G; the ODE right-hand side queries the table.
class MassOde {
public:
    explicit MassOde(InitialCondition ic);

    const InitialCondition& ic() const { return ic_; }
    double m0() const { return m0_; }

    // G(a); closed form for Indicator data, quadrature otherwise. a must be > 0.
    double G(double a) const;

    // F(a) = int_0^a G; F(0) = 0, F increasing, F -> M(0) as a -> inf.
    double F(double a) const;

    TimeRescaling solve(double t_end, const OdeControls& controls = {}) const;

    // Requires a finite first moment.
    AsymptoticConstants asymptotic_constants() const;

    // Least-squares slope of log a vs log t over [t_lo, t_hi];
    // window must span at least one decade.
    static double tail_exponent(const TimeRescaling& resc, double t_lo, double t_hi,
                                int samples = 64);

private:
    double quadrature_G(double a) const;
    void extend_cache(double a_needed) const;
    double interp_F(double a) const;

    InitialCondition ic_;
    double m0_ = 0.0;

    // F table on a geometric grid, guarded for lazy extension.
    mutable std::vector<double> log_a_;
    mutable std::vector<double> f_;
    mutable std::vector<double> df_dlog_;  // a G(a) at the knots
};

}  // namespace nld

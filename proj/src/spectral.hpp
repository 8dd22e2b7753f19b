#pragma once

#include <vector>

#include "density_field.hpp"
#include "ode.hpp"

namespace nld {

// Explicit decaying solution on (0, pi): w*(t,x) = (M/2) sin(x) / (1 + M t),
// where M is the initial mass.
struct ExplicitSolution {
    double mass = 0.0;

    double operator()(double t, double x) const;
    double mass_at(double t) const { return mass / (1.0 + mass * t); }
};

// Fourier sine coefficients w_n(0) = (2/pi) int_0^pi w_in(x) sin(nx) dx,
// n = 1..n_modes. Closed form for ScaledSine and Indicator data.
std::vector<double> fourier_coefficients(const InitialCondition& ic, int n_modes);

// Sine-series solver for the bounded problem: w_n(t) = w_n(0) e^{-n^2 a(t)}
// with a' = sum_{n odd} (2 w_n(0)/n) e^{-n^2 a}, a(0) = 0.
class SpectralSolver {
public:
    explicit SpectralSolver(std::vector<double> coefficients);

    static SpectralSolver from_ic(const InitialCondition& ic, int n_modes);

    // Mass identity M(0) = sum_{n odd} 2 w_n(0) / n.
    double mass0() const;

    void solve(double t_end, const OdeControls& controls = {1e-12, 1e-14});
    bool solved() const { return !a_.t.empty(); }

    double a_at(double t) const;
    double mass_at(double t) const;

    double evaluate_at(double t, double x) const;
    DensityField evaluate(double t, const Grid1D& grid) const;

    // Constant K of the large-time law a ~ log(2 w_1(0) (t + K)).
    double compute_K() const;

    const std::vector<double>& coefficients() const { return w0_; }

    // Truncation tail bound |w_{N}(0)| e^{-N^2 a} sum estimate at time t.
    double truncation_bound(double t) const;

private:
    double g_of_a(double a) const;  // a' = g(a)

    std::vector<double> w0_;  // w0_[n-1] = w_n(0)
    OdeTrajectory a_;
};

}  // namespace nld

#include "spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quadrature.hpp"

namespace nld {

double ExplicitSolution::operator()(double t, double x) const {
    if (!(mass > 0.0)) throw std::domain_error("ExplicitSolution: mass must be positive");
    return 0.5 * mass * std::sin(x) / (1.0 + mass * t);
}

std::vector<double> fourier_coefficients(const InitialCondition& ic, int n_modes) {
    if (n_modes < 1) throw std::invalid_argument("fourier_coefficients: n_modes < 1");
    std::vector<double> w(n_modes, 0.0);

    if (const auto* sine = std::get_if<ScaledSine>(&ic.variant())) {
        w[0] = 0.5 * sine->mass;
        return w;
    }
    if (const auto* ind = std::get_if<Indicator>(&ic.variant())) {
        double lo = std::max(ind->lo, 0.0);
        double hi = std::min(ind->hi, M_PI);
        if (hi > lo)
            for (int n = 1; n <= n_modes; ++n)
                w[n - 1] = 2.0 / (M_PI * n) * (std::cos(n * lo) - std::cos(n * hi));
        return w;
    }
    double hi = std::min(ic.support_hi(), M_PI);
    double lo = std::max(ic.support_lo(), 0.0);
    if (hi > lo) {
        for (int n = 1; n <= n_modes; ++n) {
            int panels = std::max(8, 2 * n);
            w[n - 1] = 2.0 / M_PI *
                       gl_composite(lo, hi, panels, 8, [&](double x) {
                           return ic.evaluate(x) * std::sin(n * x);
                       });
        }
    }
    return w;
}

SpectralSolver::SpectralSolver(std::vector<double> coefficients)
    : w0_(std::move(coefficients)) {
    if (w0_.empty()) throw std::invalid_argument("SpectralSolver: no modes");
}

SpectralSolver SpectralSolver::from_ic(const InitialCondition& ic, int n_modes) {
    return SpectralSolver(fourier_coefficients(ic, n_modes));
}

double SpectralSolver::mass0() const {
    double m = 0.0;
    for (size_t n = 1; n <= w0_.size(); n += 2) m += 2.0 * w0_[n - 1] / n;
    return m;
}

double SpectralSolver::g_of_a(double a) const {
    double s = 0.0;
    for (size_t n = 1; n <= w0_.size(); n += 2)
        s += 2.0 * w0_[n - 1] / n * std::exp(-static_cast<double>(n) * n * a);
    return s;
}

void SpectralSolver::solve(double t_end, const OdeControls& controls) {
    if (!(mass0() > 0.0))
        throw std::domain_error("SpectralSolver: initial mass must be positive");
    a_ = integrate_ode([this](double, double a) { return g_of_a(a); }, 0.0, t_end,
                       controls);
}

double SpectralSolver::a_at(double t) const {
    if (!solved()) throw std::logic_error("SpectralSolver: solve() first");
    double a = a_.eval(t);  // Hermite estimate; also validates the time range.
    // The a-ODE is autonomous with positive rhs, so refine with Newton on
    // t - t_i = int_{a_i}^{a} ds / g(s) from the last accepted node before t.
    auto it = std::upper_bound(a_.t.begin(), a_.t.end(), t);
    size_t i = (it == a_.t.begin()) ? 0 : static_cast<size_t>(it - a_.t.begin()) - 1;
    double ti = a_.t[i], ai = a_.y[i];
    for (int iter = 0; iter < 4; ++iter) {
        double elapsed =
            gl_composite(ai, a, 4, 16, [&](double s) { return 1.0 / g_of_a(s); });
        a -= (elapsed - (t - ti)) * g_of_a(a);
    }
    return a;
}

double SpectralSolver::mass_at(double t) const {
    return g_of_a(a_at(t));
}

double SpectralSolver::evaluate_at(double t, double x) const {
    double a = a_at(t);
    double sum = 0.0;
    for (size_t n = 1; n <= w0_.size(); ++n)
        sum += w0_[n - 1] * std::exp(-static_cast<double>(n) * n * a) * std::sin(n * x);
    return sum;
}

DensityField SpectralSolver::evaluate(double t, const Grid1D& grid) const {
    DensityField field{grid, std::vector<double>(grid.node_count()), t};
    for (long j = 0; j < grid.node_count(); ++j)
        field.values[j] = evaluate_at(t, grid.node(j));
    return field;
}

double SpectralSolver::truncation_bound(double t) const {
    double a = a_at(t);
    size_t n = w0_.size();
    return std::abs(w0_.back()) * std::exp(-static_cast<double>(n) * n * a) *
           static_cast<double>(n);
}

double SpectralSolver::compute_K() const {
    double w1 = w0_[0];
    if (!(w1 > 0.0)) throw std::domain_error("compute_K: w_1(0) must be positive");

    auto ratio = [&](double a) {
        double num = 0.0, den = 1.0;
        for (size_t n = 3; n <= w0_.size(); n += 2) {
            double r = w0_[n - 1] / (static_cast<double>(n) * w1);
            double n2 = static_cast<double>(n) * n;
            num += r * std::exp((2.0 - n2) * a);
            den += r * std::exp((1.0 - n2) * a);
        }
        return num / den;
    };
    // Integrand decays like e^{-7a}; e^{-7a} < 1e-16 past a ~ 5.3.
    double integral = gl_composite(0.0, 5.4, 32, 16, ratio);
    return 1.0 / (2.0 * w1) * (1.0 + integral);
}

}  // namespace nld

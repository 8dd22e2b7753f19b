#include "kernel_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quadrature.hpp"

namespace nld {

KernelRun::KernelRun(InitialCondition ic, TimeRescaling rescaling, Grid1D grid,
                     KernelQuadrature quad)
    : ic_(std::move(ic)),
      rescaling_(std::move(rescaling)),
      grid_(grid),
      quad_(quad),
      mass_ode_(ic_) {
    if (std::abs(rescaling_.m0 - ic_.mass0()) > 1e-10)
        throw std::invalid_argument(
            "KernelRun: rescaling was not produced from this initial condition");
    if (quad_.nodes_per_panel < 2 || !(quad_.kappa > 0))
        throw std::invalid_argument("KernelRun: bad quadrature controls");
}

double KernelRun::integrate_point(double x, double a) const {
    const double w = quad_.kappa * std::sqrt(4.0 * a);
    double lo = std::max(ic_.support_lo(), std::max(0.0, x - w));
    double hi = std::min(ic_.support_hi(), x + w);
    if (!(hi > lo)) return 0.0;

    auto integrand = [&](double y) {
        double d = x - y;
        return ic_.evaluate(y) * std::exp(-d * d / (4.0 * a)) *
               (-std::expm1(-x * y / a));
    };
    int panels = static_cast<int>(std::ceil((hi - lo) / std::sqrt(4.0 * a)));
    panels = std::clamp(panels, 1, 2 * static_cast<int>(quad_.kappa) + 2);
    double integral = gl_composite(lo, hi, panels, quad_.nodes_per_panel, integrand);
    return integral / (2.0 * std::sqrt(M_PI * a));
}

double KernelRun::evaluate_at(double t, double x) const {
    double a = rescaling_.a_at(t);
    if (!(a > 0.0)) throw std::domain_error("KernelRun: a(t) must be positive");
    return integrate_point(x, a);
}

DensityField KernelRun::evaluate(double t) const {
    double a = rescaling_.a_at(t);
    if (!(a > 0.0)) throw std::domain_error("KernelRun: a(t) must be positive");
    DensityField field{grid_, std::vector<double>(grid_.node_count()), t};
    for (long j = 0; j < grid_.node_count(); ++j)
        field.values[j] = integrate_point(grid_.node(j), a);
    return field;
}

double KernelRun::flux_at_origin(double t) const {
    if (rescaling_.degenerate) return 0.0;
    double a = rescaling_.a_at(t);
    if (!(a > 0.0)) throw std::domain_error("KernelRun: a(t) must be positive");
    return mass_ode_.G(a);
}

double KernelRun::self_consistency_residual(std::span<const double> times) const {
    if (rescaling_.degenerate) return 0.0;
    double worst = 0.0;
    for (double t : times) {
        MomentRecord rec = moments(evaluate(t));
        double m = rescaling_.mass_at(t);
        worst = std::max(worst, std::abs(rec.mass - m) / m);
    }
    return worst;
}

}  // namespace nld

#include "fd_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nld {

namespace {

double trapezoid_mass(const std::vector<double>& u, double dx) {
    double sum = 0.5 * (u.front() + u.back());
    for (size_t j = 1; j + 1 < u.size(); ++j) sum += u[j];
    return sum * dx;
}

}  // namespace

void FdConfig::validate(double m0) const {
    if (!(t_end > 0.0)) throw std::invalid_argument("FdConfig: t_end must be positive");
    if (!(theta > 0.0) || theta > 1.0)
        throw std::invalid_argument("FdConfig: theta must lie in (0, 1]");
    double dx = grid.spacing();
    double bound = m0 > 0.0 ? dx * dx / (2.0 * m0) : 0.0;
    if (dt > 0.0 && m0 > 0.0 && dt > theta * bound)
        throw std::invalid_argument("FdConfig: dt " + std::to_string(dt) +
                                    " exceeds stability bound " +
                                    std::to_string(theta * bound));
    for (double t : output_times)
        if (!(t > 0.0) || t > t_end)
            throw std::domain_error("FdConfig: output times must lie in (0, t_end]");
}

void fd_step(std::vector<double>& values, double dx, double dt, double mass_prev) {
    if (mass_prev > 0.0 && dt > dx * dx / (2.0 * mass_prev) * (1.0 + 1e-12))
        throw std::runtime_error("fd_step: stability violated, max stable dt = " +
                                 std::to_string(dx * dx / (2.0 * mass_prev)));
    const double coef = dt * mass_prev / (dx * dx);
    const size_t n = values.size();
    double left = values[0];
    for (size_t j = 1; j + 1 < n; ++j) {
        double center = values[j];
        values[j] = center + coef * (values[j + 1] - 2.0 * center + left);
        left = center;
    }
    values[0] = 0.0;
    values[n - 1] = 0.0;
}

FdResult fd_run(const FdConfig& config, const InitialCondition& ic) {
    DensityField field = sample_ic(ic, config.grid);
    const double dx = config.grid.spacing();
    double mass = trapezoid_mass(field.values, dx);
    config.validate(mass);

    FdResult result;
    result.stability_bound = mass > 0.0 ? dx * dx / (2.0 * mass) : 0.0;
    result.dt = config.dt > 0.0 ? config.dt : config.theta * result.stability_bound;
    if (!(result.dt > 0.0))
        throw std::invalid_argument("fd_run: zero-mass data needs an explicit dt");
    const double dt = result.dt;

    std::vector<double> output_times = config.output_times;
    std::sort(output_times.begin(), output_times.end());
    // Snap each output to the nearest completed step.
    std::vector<long> output_steps(output_times.size());
    for (size_t i = 0; i < output_times.size(); ++i)
        output_steps[i] = std::lround(output_times[i] / dt);

    const long total_steps = static_cast<long>(std::ceil(config.t_end / dt - 1e-9));

    double a = 0.0;
    double next_record = 0.0;
    const double record_growth = std::pow(10.0, 1.0 / 32.0);
    size_t out_idx = 0;

    auto record_series = [&](double t) {
        field.time = t;
        MomentRecord rec = moments(field);
        result.series.push_back({t, rec.mass, rec.m1, rec.m2, rec.sup_norm, a});
    };
    record_series(0.0);
    next_record = dt;

    for (long step = 1; step <= total_steps; ++step) {
        double mass_prev = mass;
        fd_step(field.values, dx, dt, mass_prev);
        a += mass_prev * dt;
        double t = step * dt;

        // Truncation loss at x = L: outward flux M * |u_x(L)| estimated from
        // the last interior node.
        double edge = field.values[field.values.size() - 2];
        result.boundary_mass_loss += mass_prev * dt * edge / dx;
        result.boundary_m1_loss += mass_prev * dt * config.grid.length() * edge / dx;

        mass = trapezoid_mass(field.values, dx);

        if (t >= next_record || step == total_steps) {
            record_series(t);
            next_record = std::max(next_record * record_growth, t + dt);
        }
        while (out_idx < output_steps.size() && step == output_steps[out_idx]) {
            field.time = t;
            result.outputs.push_back({field, moments(field), a});
            ++out_idx;
        }
    }
    // Outputs snapped past the final step (t_out == t_end rounding up).
    while (out_idx < output_steps.size()) {
        field.time = total_steps * dt;
        result.outputs.push_back({field, moments(field), a});
        ++out_idx;
    }
    return result;
}

}  // namespace nld

#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "interp.hpp"

namespace nld {

struct OdeControls {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    long max_steps = 2'000'000;
};

// Accepted points of a scalar ODE trajectory, with derivative values for
// cubic Hermite dense output.
struct OdeTrajectory {
    std::vector<double> t;
    std::vector<double> y;
    std::vector<double> dy;

    double eval(double time) const;
    double eval_derivative(double time) const;
};

// Dormand-Prince 5(4) embedded pair for a scalar autonomous-friendly RHS
// f(t, y). Step size adapted from the embedded error estimate.
OdeTrajectory integrate_ode(const std::function<double(double, double)>& f,
                            double y0, double t_end, const OdeControls& controls);

inline double OdeTrajectory::eval(double time) const {
    if (t.empty()) throw std::logic_error("OdeTrajectory: empty");
    if (time <= t.front()) return y.front();
    if (time >= t.back()) {
        if (time > t.back() * (1.0 + 1e-12) + 1e-12)
            throw std::domain_error("OdeTrajectory: time beyond sampled range");
        return y.back();
    }
    auto it = std::upper_bound(t.begin(), t.end(), time);
    size_t i = static_cast<size_t>(it - t.begin()) - 1;
    return hermite(t[i], y[i], dy[i], t[i + 1], y[i + 1], dy[i + 1], time);
}

inline double OdeTrajectory::eval_derivative(double time) const {
    if (t.empty()) throw std::logic_error("OdeTrajectory: empty");
    if (time <= t.front()) return dy.front();
    if (time >= t.back()) {
        if (time > t.back() * (1.0 + 1e-12) + 1e-12)
            throw std::domain_error("OdeTrajectory: time beyond sampled range");
        return dy.back();
    }
    auto it = std::upper_bound(t.begin(), t.end(), time);
    size_t i = static_cast<size_t>(it - t.begin()) - 1;
    // Derivative of the Hermite interpolant.
    double h = t[i + 1] - t[i];
    double s = (time - t[i]) / h;
    double s2 = s * s;
    return ((6 * s2 - 6 * s) * y[i] + (3 * s2 - 4 * s + 1) * h * dy[i] +
            (-6 * s2 + 6 * s) * y[i + 1] + (3 * s2 - 2 * s) * h * dy[i + 1]) / h;
}

inline OdeTrajectory integrate_ode(const std::function<double(double, double)>& f,
                                   double y0, double t_end,
                                   const OdeControls& controls) {
    // Dormand-Prince coefficients.
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                        a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    if (!(t_end > 0)) throw std::invalid_argument("integrate_ode: t_end must be positive");

    OdeTrajectory traj;
    double t = 0.0, y = y0;
    double k1 = f(t, y);
    traj.t.push_back(t);
    traj.y.push_back(y);
    traj.dy.push_back(k1);

    double scale0 = controls.abs_tol + controls.rel_tol * std::abs(y);
    double h = 0.01 * scale0 / (std::abs(k1) + 1e-30);
    h = std::min(std::max(h, 1e-12), t_end);

    long steps = 0;
    while (t < t_end) {
        if (++steps > controls.max_steps)
            throw std::runtime_error("integrate_ode: max step count exceeded");
        if (t + h > t_end) h = t_end - t;

        double k2 = f(t + c2 * h, y + h * a21 * k1);
        double k3 = f(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
        double k4 = f(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        double k5 = f(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        double k6 = f(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        double y_new = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        double k7 = f(t + h, y_new);  // FSAL
        double err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        double scale = controls.abs_tol +
                       controls.rel_tol * std::max(std::abs(y), std::abs(y_new));
        double ratio = std::abs(err) / scale;

        if (ratio <= 1.0) {
            t += h;
            y = y_new;
            k1 = k7;
            traj.t.push_back(t);
            traj.y.push_back(y);
            traj.dy.push_back(k1);
        }
        double factor = 0.9 * std::pow(std::max(ratio, 1e-10), -0.2);
        h *= std::min(5.0, std::max(0.2, factor));
    }
    return traj;
}

}  // namespace nld

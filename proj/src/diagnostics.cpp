#include "diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fit.hpp"
#include "interp.hpp"
#include "profile.hpp"

namespace nld {

SlopeFit loglog_slope(std::span<const double> t, std::span<const double> value,
                      double t_lo, double t_hi) {
    if (t.size() != value.size())
        throw std::invalid_argument("loglog_slope: size mismatch");
    if (!(t_lo > 0.0) || !(t_hi > t_lo))
        throw std::domain_error("loglog_slope: bad window");
    if (t_hi < t_lo * 10.0 * (1.0 - 1e-9))
        throw std::domain_error("loglog_slope: window must span at least one decade");
    std::vector<double> lt, lv;
    for (size_t i = 0; i < t.size(); ++i) {
        if (t[i] < t_lo || t[i] > t_hi) continue;
        if (!(value[i] > 0.0))
            throw std::domain_error("loglog_slope: nonpositive value in window");
        lt.push_back(std::log(t[i]));
        lv.push_back(std::log(value[i]));
    }
    if (lt.size() < 10)
        throw std::domain_error("loglog_slope: need at least 10 samples in window");
    auto [mn, mx] = std::minmax_element(lt.begin(), lt.end());
    if (*mx - *mn < 0.5 * std::log(10.0))
        throw std::domain_error("loglog_slope: samples cover too little of the window");
    LineFit fit = fit_line(lt, lv);
    return {t_lo, t_hi, fit.slope, fit.intercept, fit.residual_rms, fit.count};
}

CollapseReport collapse(const std::vector<DensityField>& fields,
                        const TimeRescaling& rescaling, double m1,
                        double eta_max, int n_eta) {
    if (fields.size() < 3)
        throw std::invalid_argument("collapse: need fields at >= 3 times");
    if (!(m1 > 0.0)) throw std::domain_error("collapse: m1 must be positive");
    CollapseReport report;
    for (const DensityField& field : fields) {
        double a = rescaling.a_at(field.time);
        if (!(a > 0.0)) throw std::domain_error("collapse: a(t) must be positive");
        std::vector<double> x = field.grid.nodes();
        MonotoneCubic interp(x, field.values);
        double sqrt_a = std::sqrt(a);
        double d = 0.0;
        for (int i = 0; i <= n_eta; ++i) {
            double eta = eta_max * i / n_eta;
            double u = interp(eta * sqrt_a);
            double target = m1 / (2.0 * std::sqrt(M_PI)) * eta * std::exp(-0.25 * eta * eta);
            d = std::max(d, std::abs(a * u - target));
        }
        report.times.push_back(field.time);
        report.distances.push_back(d);
    }
    std::vector<double> lt, ld;
    for (size_t i = 0; i < report.times.size(); ++i) {
        if (report.distances[i] > 0.0) {
            lt.push_back(std::log(report.times[i]));
            ld.push_back(std::log(report.distances[i]));
        }
    }
    if (lt.size() >= 3) report.fitted_exponent = fit_line(lt, ld).slope;
    return report;
}

double attractor_error(const DensityField& field, double a, double m1) {
    AttractorParams params{m1, a};
    double err = 0.0;
    for (long j = 0; j < field.grid.node_count(); ++j)
        err = std::max(err, std::abs(field.values[j] - attractor(params, field.grid.node(j))));
    return err;
}

double attractor_error(const DensityField& field, const TimeRescaling& rescaling,
                       double m1) {
    return attractor_error(field, rescaling.a_at(field.time), m1);
}

double phi_kernel(double x, double y) {
    // Exponent gap: (X+Y)^2 - (X-Y)^2 = 4XY, so the kernel pair equals
    // e^{-(X-Y)^2/4} (1 - e^{-XY}); division by Y stays finite as Y -> 0.
    double d = x - y;
    double pair_over_y = std::exp(-0.25 * d * d) * (-std::expm1(-x * y)) / y;
    return pair_over_y - x * std::exp(-0.25 * x * x);
}

double phi_kernel_bound(double x_max, double y_max, double spacing) {
    if (!(spacing > 0.0) || !(x_max > 0.0) || !(y_max > 0.0))
        throw std::invalid_argument("phi_kernel_bound: bad grid");
    double sup = 0.0;
    long nx = static_cast<long>(std::floor(x_max / spacing));
    long ny = static_cast<long>(std::floor(y_max / spacing));
    for (long i = 0; i <= nx; ++i) {
        double x = i * spacing;
        for (long j = 1; j <= ny; ++j) {
            double y = j * spacing;
            sup = std::max(sup, std::abs(phi_kernel(x, y)) / y);
        }
    }
    return sup;
}

}  // namespace nld

#include "interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nld {

MonotoneCubic::MonotoneCubic(std::span<const double> x, std::span<const double> y)
    : x_(x.begin(), x.end()), y_(y.begin(), y.end()) {
    size_t n = x_.size();
    if (n != y_.size() || n < 2) throw std::invalid_argument("MonotoneCubic: bad input");
    for (size_t i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1])) throw std::invalid_argument("MonotoneCubic: knots not increasing");

    std::vector<double> d(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) d[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);

    slope_.resize(n);
    slope_[0] = d[0];
    slope_[n - 1] = d[n - 2];
    for (size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] * d[i] <= 0.0) {
            slope_[i] = 0.0;
        } else {
            double w1 = 2.0 * (x_[i + 1] - x_[i]) + (x_[i] - x_[i - 1]);
            double w2 = (x_[i + 1] - x_[i]) + 2.0 * (x_[i] - x_[i - 1]);
            slope_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
    // Fritsch-Carlson limiter on the end slopes.
    for (size_t i = 0; i + 1 < n; ++i) {
        if (d[i] == 0.0) {
            slope_[i] = slope_[i + 1] = 0.0;
        } else {
            double a = slope_[i] / d[i];
            double b = slope_[i + 1] / d[i];
            double s = a * a + b * b;
            if (s > 9.0) {
                double tau = 3.0 / std::sqrt(s);
                slope_[i] = tau * a * d[i];
                slope_[i + 1] = tau * b * d[i];
            }
        }
    }
}

double hermite(double t0, double y0, double d0, double t1, double y1, double d1, double t) {
    double h = t1 - t0;
    double s = (t - t0) / h;
    double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * y0 + (s3 - 2 * s2 + s) * h * d0 +
           (-2 * s3 + 3 * s2) * y1 + (s3 - s2) * h * d1;
}

double MonotoneCubic::operator()(double x) const {
    if (x_.empty()) throw std::logic_error("MonotoneCubic: empty");
    if (x <= x_.front()) return y_.front();
    if (x >= x_.back()) return y_.back();
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    size_t i = static_cast<size_t>(it - x_.begin()) - 1;
    return hermite(x_[i], y_[i], slope_[i], x_[i + 1], y_[i + 1], slope_[i + 1], x);
}

}  // namespace nld

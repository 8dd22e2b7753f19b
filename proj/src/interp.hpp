#pragma once

#include <span>
#include <vector>

namespace nld {

// Monotone cubic (Fritsch-Carlson) interpolant on strictly increasing knots.
// Monotone data produces a monotone interpolant; evaluation outside the knot
// range clamps to the end values.
class MonotoneCubic {
public:
    MonotoneCubic() = default;
    MonotoneCubic(std::span<const double> x, std::span<const double> y);

    double operator()(double x) const;
    bool empty() const { return x_.empty(); }
    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

private:
    std::vector<double> x_, y_, slope_;
};

// Cubic Hermite evaluation on one interval given endpoint values/derivatives.
double hermite(double t0, double y0, double d0, double t1, double y1, double d1, double t);

}  // namespace nld

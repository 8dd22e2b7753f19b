#include "quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace nld {

namespace {

// Legendre P_n and derivative at x, by recurrence.
std::pair<double, double> legendre(int n, double x) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

GaussLegendre build_rule(int n) {
    GaussLegendre r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Chebyshev initial guess, then Newton.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            auto [p, dp] = legendre(n, x);
            double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        auto [p, dp] = legendre(n, x);
        (void)p;
        r.nodes[i] = x;
        r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

}  // namespace

const GaussLegendre& GaussLegendre::rule(int n) {
    static std::mutex mtx;
    static std::map<int, GaussLegendre> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

double GaussLegendre::integrate(double lo, double hi,
                                const std::function<double(double)>& f) const {
    double mid = 0.5 * (lo + hi);
    double half = 0.5 * (hi - lo);
    double sum = 0.0;
    for (size_t i = 0; i < nodes.size(); ++i)
        sum += weights[i] * f(mid + half * nodes[i]);
    return half * sum;
}

double gl_composite(double lo, double hi, int panels, int order,
                    const std::function<double(double)>& f) {
    if (panels < 1) throw std::invalid_argument("gl_composite: panels < 1");
    const auto& rule = GaussLegendre::rule(order);
    double h = (hi - lo) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p)
        sum += rule.integrate(lo + p * h, lo + (p + 1) * h, f);
    return sum;
}

double tanh_sinh_01(const std::function<double(double)>& f, double tol) {
    // x(u) = (1 + tanh((pi/2) sinh u)) / 2 maps R onto (0,1).
    // Level doubling until the sum stabilizes.
    const double umax = 4.0;
    double h = 0.5;
    auto eval_at = [&](double u) {
        double s = std::sinh(u);
        double c = std::cosh(u);
        double t = std::tanh(M_PI_2 * s);
        double x = 0.5 * (1.0 + t);
        double sech = 1.0 / std::cosh(M_PI_2 * s);
        double w = 0.25 * M_PI * c * sech * sech;
        if (x <= 0.0 || x >= 1.0 || w == 0.0) return 0.0;
        double v = f(x) * w;
        return std::isfinite(v) ? v : 0.0;
    };
    double sum = eval_at(0.0);
    for (double u = h; u <= umax; u += h) sum += eval_at(u) + eval_at(-u);
    double result = sum * h;
    for (int level = 0; level < 10; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double u = h; u <= umax; u += 2 * h) add += eval_at(u) + eval_at(-u);
        sum += add;
        double next = sum * h;
        if (std::abs(next - result) < tol * (std::abs(next) + 1e-300) && level > 1) {
            result = next;
            break;
        }
        result = next;
    }
    return result;
}

double trapezoid(std::span<const double> values, double dx) {
    if (values.size() < 2) return 0.0;
    double sum = 0.5 * (values.front() + values.back());
    for (size_t i = 1; i + 1 < values.size(); ++i) sum += values[i];
    return sum * dx;
}

}  // namespace nld

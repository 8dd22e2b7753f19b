#pragma once

#include <functional>
#include <span>
#include <vector>

namespace nld {

// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
// Computed once per order and cached.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    static const GaussLegendre& rule(int n);

    // Integrate f over [lo, hi] with this rule.
    double integrate(double lo, double hi, const std::function<double(double)>& f) const;
};

// Composite Gauss-Legendre: [lo, hi] split into `panels` equal panels,
// `order`-point rule on each.
double gl_composite(double lo, double hi, int panels, int order,
                    const std::function<double(double)>& f);

// Tanh-sinh (double-exponential) quadrature over (0, 1).
// Handles integrable endpoint singularities such as t^{alpha-1}(1-t)^{beta-alpha-1}.
double tanh_sinh_01(const std::function<double(double)>& f, double tol = 1e-14);

// Composite trapezoid on uniformly spaced samples with spacing dx.
double trapezoid(std::span<const double> values, double dx);

}  // namespace nld

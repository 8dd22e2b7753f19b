#include "density_field.hpp"

#include <cmath>

#include "quadrature.hpp"

namespace nld {

DensityField sample_ic(const InitialCondition& ic, const Grid1D& grid) {
    DensityField field{grid, std::vector<double>(grid.node_count()), 0.0};
    for (long j = 0; j < grid.node_count(); ++j)
        field.values[j] = ic.evaluate(grid.node(j));
    return field;
}

MomentRecord moments(const DensityField& field) {
    const double dx = field.grid.spacing();
    const long n = field.grid.node_count();
    MomentRecord rec;
    rec.t = field.time;
    double m0 = 0.0, m1 = 0.0, m2 = 0.0, sup = 0.0;
    for (long j = 0; j < n; ++j) {
        double w = (j == 0 || j == n - 1) ? 0.5 : 1.0;
        double x = field.grid.node(j);
        double u = field.values[j];
        m0 += w * u;
        m1 += w * x * u;
        m2 += w * x * x * u;
        sup = std::max(sup, std::abs(u));
    }
    rec.mass = m0 * dx;
    rec.m1 = m1 * dx;
    rec.m2 = m2 * dx;
    rec.sup_norm = sup;
    return rec;
}

}  // namespace nld

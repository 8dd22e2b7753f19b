#pragma once

#include <vector>

#include "grid.hpp"
#include "initial_condition.hpp"

namespace nld {

// Sampled u(t, .) on a grid at one time.
struct DensityField {
    Grid1D grid;
    std::vector<double> values;
    double time = 0.0;
};

// Pointwise evaluation of the initial condition at the grid nodes, time 0.
DensityField sample_ic(const InitialCondition& ic, const Grid1D& grid);

// Mass and first/second moments by composite trapezoid; sup-norm is max |u_j|.
MomentRecord moments(const DensityField& field);

}  // namespace nld

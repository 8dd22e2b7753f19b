#pragma once

#include <vector>

#include "density_field.hpp"

namespace nld {

struct FdConfig {
    Grid1D grid;
    double t_end = 0.0;
    std::vector<double> output_times;
    double dt = 0.0;     // <= 0: choose theta * dx^2 / (2 M(0))
    double theta = 0.9;  // safety factor in (0, 1]

    void validate(double m0) const;
};

struct FdSeriesPoint {
    double t = 0.0;
    double mass = 0.0;
    double m1 = 0.0;
    double m2 = 0.0;
    double sup_norm = 0.0;
    double a = 0.0;  // running sum of M_prev * dt
};

struct FdOutput {
    DensityField field;
    MomentRecord record;
    double a = 0.0;
};

struct FdResult {
    double dt = 0.0;
    double stability_bound = 0.0;  // dx^2 / (2 M(0)); the bound relaxes as M decays
    std::vector<FdOutput> outputs;
    std::vector<FdSeriesPoint> series;  // geometric cadence in t
    double boundary_mass_loss = 0.0;    // accumulated flux estimate at x = L
    double boundary_m1_loss = 0.0;
};

// One explicit step u_j += dt * mass_prev * (u_{j+1} - 2u_j + u_{j-1}) / dx^2,
// Dirichlet zeros at both ends. Throws if dt violates the stability bound for
// the supplied mass.
void fd_step(std::vector<double>& values, double dx, double dt, double mass_prev);

FdResult fd_run(const FdConfig& config, const InitialCondition& ic);

}  // namespace nld

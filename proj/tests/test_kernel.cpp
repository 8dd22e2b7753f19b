#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "kernel_solver.hpp"

using namespace nld;

namespace {

KernelRun make_run(const InitialCondition& ic, double t_end, const Grid1D& grid) {
    MassOde ode(ic);
    return KernelRun(ic, ode.solve(t_end), grid);
}

}  // namespace

TEST_CASE("Dirichlet boundary: u(t, 0) = 0 exactly") {
    KernelRun run = make_run(InitialCondition{Indicator{1.0, 2.0}}, 100.0,
                             Grid1D(50.0, 251));
    for (double t : {1.0, 10.0, 100.0}) {
        CHECK(run.evaluate_at(t, 0.0) == 0.0);
        CHECK(run.evaluate(t).values.front() == 0.0);
    }
}

TEST_CASE("narrow source approaches the image-kernel point response") {
    double h = 1e-3;
    InitialCondition ic{Indicator{1.0 - h, 1.0 + h}};
    KernelRun run = make_run(ic, 10.0, Grid1D(20.0, 101));
    double t = 2.0;
    double a = run.rescaling().a_at(t);
    for (double x : {0.5, 1.0, 2.0, 4.0}) {
        double exact = 2.0 * h / std::sqrt(4.0 * M_PI * a) *
                       (std::exp(-(x - 1) * (x - 1) / (4 * a)) -
                        std::exp(-(x + 1) * (x + 1) / (4 * a)));
        CHECK(run.evaluate_at(t, x) == doctest::Approx(exact).epsilon(1e-4));
    }
}

TEST_CASE("narrow source mass follows erf(1/(2 sqrt(a)))") {
    double h = 1e-3;
    InitialCondition ic{Indicator{1.0 - h, 1.0 + h}};
    KernelRun run = make_run(ic, 50.0, Grid1D(60.0, 601));
    for (double t : {1.0, 10.0, 50.0}) {
        double a = run.rescaling().a_at(t);
        double exact = 2.0 * h * std::erf(1.0 / (2.0 * std::sqrt(a)));
        CHECK(run.rescaling().mass_at(t) == doctest::Approx(exact).epsilon(1e-4));
        CHECK(moments(run.evaluate(t)).mass == doctest::Approx(exact).epsilon(1e-3));
    }
}

TEST_CASE("flux at the origin equals G(a(t)) and tracks -M'/M") {
    InitialCondition ic{Indicator{1.0, 2.0}};
    MassOde ode(ic);
    TimeRescaling resc = ode.solve(200.0);
    KernelRun run(ic, resc, Grid1D(100.0, 501));
    for (double t : {1.0, 10.0, 100.0}) {
        double flux = run.flux_at_origin(t);
        CHECK(flux >= 0.0);
        CHECK(flux == doctest::Approx(ode.G(resc.a_at(t))).epsilon(1e-12));
        double dt = 1e-3 * std::max(1.0, t);
        double mp = (resc.mass_at(t + dt) - resc.mass_at(t - dt)) / (2 * dt);
        CHECK(-mp / resc.mass_at(t) == doctest::Approx(flux).epsilon(1e-3));
    }
}

TEST_CASE("positivity and sup-norm bound") {
    InitialCondition ic{Indicator{1.0, 2.0}};
    KernelRun run = make_run(ic, 500.0, Grid1D(200.0, 1001));
    double m1 = 1.5;
    for (double t : {5.0, 50.0, 500.0}) {
        DensityField field = run.evaluate(t);
        double a = run.rescaling().a_at(t);
        double bound = m1 / (std::sqrt(2.0 * M_E * M_PI) * a);
        double sup = 0.0;
        for (size_t j = 1; j < field.values.size(); ++j) {
            // Strictly positive until the Gaussian tail underflows to zero.
            CHECK(field.values[j] >= 0.0);
            sup = std::max(sup, field.values[j]);
        }
        for (double x = 0.5; x <= 4.0 * std::sqrt(a); x += 0.5)
            CHECK(run.evaluate_at(t, x) > 0.0);
        CHECK(sup <= bound * (1.0 + 1e-10));
    }
}

TEST_CASE("first moment is conserved while the tail stays inside the window") {
    InitialCondition ic{Indicator{1.0, 2.0}};
    KernelRun run = make_run(ic, 50.0, Grid1D(120.0, 1201));
    for (double t : {5.0, 50.0}) {
        // sqrt(a) ~ 4 at t = 50, so the Gaussian tail at L = 120 is negligible.
        CHECK(moments(run.evaluate(t)).m1 == doctest::Approx(1.5).epsilon(1e-4));
    }
}

TEST_CASE("smoothing: bounded discrete curvature from discontinuous data") {
    InitialCondition ic{Indicator{1.0, 2.0}};
    KernelRun run = make_run(ic, 1.0, Grid1D(10.0, 401));
    DensityField field = run.evaluate(0.5);
    double dx = field.grid.spacing();
    for (size_t j = 1; j + 1 < field.values.size(); ++j) {
        double curv = (field.values[j + 1] - 2 * field.values[j] + field.values[j - 1]) /
                      (dx * dx);
        CHECK(std::abs(curv) < 50.0);
    }
}

TEST_CASE("self-consistency: kernel mass agrees with the ODE mass") {
    InitialCondition ic{Indicator{1.0, 2.0}};
    KernelRun run = make_run(ic, 500.0, Grid1D(400.0, 2001));
    std::vector<double> times{50.0, 500.0};
    CHECK(run.self_consistency_residual(times) < 1e-3);
}

TEST_CASE("short window at late time: the residual flags escaped mass") {
    InitialCondition ic{Indicator{1.0, 2.0}};
    KernelRun run = make_run(ic, 5000.0, Grid1D(10.0, 101));
    std::vector<double> times{5000.0};
    CHECK(run.self_consistency_residual(times) > 0.1);
}

TEST_CASE("mismatched rescaling is rejected") {
    InitialCondition a{Indicator{1.0, 2.0}};
    InitialCondition b{Indicator{1.0, 3.0}};  // M(0) = 2
    TimeRescaling resc = MassOde(b).solve(10.0);
    CHECK_THROWS_AS(KernelRun(a, resc, Grid1D(10.0, 11)), std::invalid_argument);
}

TEST_CASE("evaluation outside the solved time range is rejected") {
    KernelRun run = make_run(InitialCondition{Indicator{1.0, 2.0}}, 10.0,
                             Grid1D(10.0, 11));
    CHECK_THROWS_AS(run.evaluate_at(20.0, 1.0), std::domain_error);
}

TEST_CASE("zero data: field and flux vanish") {
    InitialCondition ic{Tabulated{{0, 1, 2}, {0, 0, 0}}};
    MassOde ode(ic);
    KernelRun run(ic, ode.solve(10.0), Grid1D(5.0, 21));
    CHECK(run.flux_at_origin(1.0) == 0.0);
    std::vector<double> times{1.0};
    CHECK(run.self_consistency_residual(times) == 0.0);
}

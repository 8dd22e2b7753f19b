// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Expensive runs (mass ODE trajectories, the long FD run, kernel
// field evaluations) are shared across criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "diagnostics.hpp"
#include "fd_solver.hpp"
#include "kernel_solver.hpp"
#include "mass_ode.hpp"
#include "profile.hpp"
#include "special_functions.hpp"
#include "spectral.hpp"

using namespace nld;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool pass,
            const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion,
                name.c_str(), detail.c_str());
    if (!pass) ++g_failures;
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

SlopeFit fit_series(const std::vector<double>& t, const std::vector<double>& v,
                    double lo, double hi) {
    return loglog_slope(t, v, lo, hi);
}

}  // namespace

int main() {
    const InitialCondition chi{Indicator{1.0, 2.0}};
    const double m1 = 1.5;

    // ---- shared runs -------------------------------------------------------
    auto clock0 = std::chrono::steady_clock::now();
    MassOde ode(chi);
    TimeRescaling resc = ode.solve(1e5);
    double ode_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - clock0).count();

    std::printf("running the long finite-difference run (L=400, dx=0.2, t=5e4)...\n");
    FdConfig fd_config{.grid = Grid1D(400.0, 2001), .t_end = 5e4,
                       .output_times = {50.0, 500.0, 5000.0, 50000.0}};
    FdResult fd = fd_run(fd_config, chi);

    KernelRun kernel(chi, resc, Grid1D(400.0, 2001));

    // ---- 1: mass-decay law -------------------------------------------------
    {
        std::vector<double> t, m;
        for (double s = 1e4; s <= 1e5 * 1.0000001; s *= std::pow(10.0, 1.0 / 24.0)) {
            t.push_back(s);
            m.push_back(resc.mass_at(s));
        }
        SlopeFit ode_fit = fit_series(t, m, 1e4, 1e5);
        bool ode_ok = std::abs(ode_fit.slope + 1.0 / 3.0) <= 0.02 && ode_seconds < 1.0;

        std::vector<double> ft, fm;
        for (const auto& p : fd.series)
            if (p.t > 0.0) {
                ft.push_back(p.t);
                fm.push_back(p.mass);
            }
        SlopeFit fd_fit = fit_series(ft, fm, 5e3, 5e4);
        bool fd_ok = std::abs(fd_fit.slope + 1.0 / 3.0) <= 0.05;
        report(1, "mass decay slope -1/3", ode_ok && fd_ok,
               "ode slope " + num(ode_fit.slope) + " in " + num(ode_seconds) +
                   " s; fd slope " + num(fd_fit.slope));
    }

    // ---- 2: asymptotic constant -------------------------------------------
    {
        double c = ode.asymptotic_constants().c;
        double observed = resc.a_at(1e5) / std::pow(1e5, 2.0 / 3.0);
        bool ok = std::abs(observed - c) <= 0.05 * c;
        report(2, "a(t) ~ c t^{2/3} with c = (3 M1/(2 sqrt(pi)))^{2/3}", ok,
               "c " + num(c) + ", observed " + num(observed));
    }

    // ---- 3: heavy-tail exponent -------------------------------------------
    {
        MassOde heavy{InitialCondition{PowerTail{1.5}}};
        TimeRescaling heavy_resc = heavy.solve(1e5);
        double slope = MassOde::tail_exponent(heavy_resc, 1e4, 1e5);
        bool ok = std::abs(slope - 0.8) <= 0.05;
        report(3, "heavy-tail a-exponent 2/(delta+1) = 0.8", ok, "slope " + num(slope));
    }

    // ---- 4: cross-solver oracle -------------------------------------------
    {
        auto gap_at = [&](long nodes) {
            Grid1D grid(60.0, nodes);
            FdConfig config{.grid = grid, .t_end = 50.0, .output_times = {50.0}};
            FdResult run = fd_run(config, chi);
            KernelRun ref(chi, resc, grid);
            DensityField exact = ref.evaluate(run.outputs[0].field.time);
            double sup = 0.0;
            for (long j = 0; j < grid.node_count(); ++j)
                sup = std::max(sup, std::abs(run.outputs[0].field.values[j] -
                                             exact.values[j]));
            return sup;
        };
        double coarse = gap_at(601);   // dx = 0.1
        double fine = gap_at(1201);    // dx = 0.05
        // The gap is dominated by the O(dx) edge term of pointwise indicator
        // sampling, so the halving ratio approaches 2 from below; allow 5%.
        bool ok = coarse <= 5e-3 && coarse / fine >= 1.9;
        report(4, "fd vs kernel at t=50", ok,
               "gap " + num(coarse) + " at dx=0.1, ratio " + num(coarse / fine));
    }

    // ---- 5: self-similar collapse -----------------------------------------
    {
        std::vector<DensityField> canonical;
        for (double t : {50.0, 500.0, 5000.0, 50000.0})
            canonical.push_back(kernel.evaluate(t));
        CollapseReport four = collapse(canonical, resc, m1);
        bool decreasing = true;
        for (size_t i = 1; i < four.distances.size(); ++i)
            decreasing = decreasing && four.distances[i] < four.distances[i - 1];

        std::vector<DensityField> window_fields;
        for (int i = 0; i < 12; ++i) {
            double t = 5e2 * std::pow(1e2, i / 11.0);  // log-spaced over [5e2, 5e4]
            window_fields.push_back(kernel.evaluate(t));
        }
        CollapseReport fit = collapse(window_fields, resc, m1);
        bool ok = decreasing && fit.fitted_exponent <= -0.30;
        report(5, "rescaled collapse distance decays", ok,
               "d " + num(four.distances.front()) + " -> " + num(four.distances.back()) +
                   ", exponent " + num(fit.fitted_exponent));
    }

    // ---- 6: convergence-rate bound ----------------------------------------
    {
        bool ok = true;
        double prev = -1.0, worst_ratio = 0.0;
        for (int i = 0; i <= 8; ++i) {
            double t = 1e3 * std::pow(1e2, i / 8.0);
            double q = attractor_error(kernel.evaluate(t), resc, m1) * t;
            if (prev > 0.0) {
                worst_ratio = std::max(worst_ratio, q / prev);
                if (q > 1.1 * prev) ok = false;
            }
            prev = q;
        }
        report(6, "attractor error O(1/t): t-weighted error non-increasing", ok,
               "worst consecutive ratio " + num(worst_ratio));
    }

    // ---- 7: sup-norm bound -------------------------------------------------
    {
        bool ok = true;
        double worst = 0.0;
        auto check_field = [&](double sup, double a, double first_moment) {
            if (a <= 0.0) return;
            double ratio = sup * a / (first_moment / std::sqrt(2.0 * M_E * M_PI));
            worst = std::max(worst, ratio);
            if (ratio > 1.0 + 1e-9) ok = false;
        };
        for (double t : {10.0, 100.0, 1000.0, 10000.0, 100000.0})
            check_field(moments(kernel.evaluate(t)).sup_norm, resc.a_at(t), m1);
        // The discrete run conserves its own sampled first moment, which
        // carries the O(dx) indicator edge surplus.
        double fd_m1_0 = fd.series.front().m1;
        for (const auto& p : fd.series) check_field(p.sup_norm, p.a, fd_m1_0);
        MassOde seed_ode{InitialCondition{SelfSimilarSeed{1.5}}};
        TimeRescaling seed_resc = seed_ode.solve(1e3);
        KernelRun seed_run(InitialCondition{SelfSimilarSeed{1.5}}, seed_resc,
                           Grid1D(200.0, 1001));
        for (double t : {1.0, 10.0, 100.0, 1000.0})
            check_field(moments(seed_run.evaluate(t)).sup_norm, seed_resc.a_at(t), 1.5);
        SpectralSolver sine = SpectralSolver::from_ic(InitialCondition{ScaledSine{2.0}}, 32);
        sine.solve(1e3);
        for (double t : {1.0, 10.0, 100.0, 1000.0}) {
            double sup = 0.0;
            for (int j = 0; j <= 128; ++j)
                sup = std::max(sup, sine.evaluate_at(t, j * M_PI / 128));
            check_field(sup, sine.a_at(t), M_PI);  // M1(0) = mass * pi / 2
        }
        report(7, "sup-norm bound M1/(sqrt(2 e pi) a)", ok,
               "worst ratio to bound " + num(worst));
    }

    // ---- 8: first-moment conservation -------------------------------------
    {
        double kernel_drift = 0.0;
        for (double t : {100.0, 1000.0, 10000.0})
            kernel_drift = std::max(kernel_drift,
                                    std::abs(moments(kernel.evaluate(t)).m1 - m1) / m1);
        double fd_m1_0 = fd.series.front().m1;  // discrete initial first moment
        double fd_m1 = fd.outputs.back().record.m1;
        double fd_drift = std::abs(fd_m1 - fd_m1_0);
        bool ok = kernel_drift <= 1e-4 &&
                  fd_drift <= fd.boundary_m1_loss + 1e-2 * fd_m1_0;
        report(8, "first moment conserved", ok,
               "kernel drift " + num(kernel_drift) + ", fd drift " + num(fd_drift) +
                   " vs boundary loss " + num(fd.boundary_m1_loss));
    }

    // ---- 9: bounded-domain exactness --------------------------------------
    {
        SpectralSolver single = SpectralSolver::from_ic(InitialCondition{ScaledSine{2.0}}, 16);
        single.solve(100.0);
        ExplicitSolution star{.mass = 2.0};
        double worst = 0.0;
        for (double t : {0.1, 0.5, 1.0, 10.0, 100.0})
            for (int j = 0; j <= 64; ++j) {
                double x = j * M_PI / 64;
                worst = std::max(worst, std::abs(single.evaluate_at(t, x) - star(t, x)));
            }
        SpectralSolver flat =
            SpectralSolver::from_ic(InitialCondition{Indicator{0.0, M_PI}}, 64);
        flat.solve(1e3);
        ExplicitSolution flat_star{.mass = flat.mass0()};
        double weighted_max = 0.0;
        for (double t = 10.0; t <= 1e3 * 1.000001; t *= std::pow(10.0, 0.25)) {
            double sup = 0.0;
            for (int j = 0; j <= 64; ++j) {
                double x = j * M_PI / 64;
                sup = std::max(sup, std::abs(flat.evaluate_at(t, x) - flat_star(t, x)));
            }
            weighted_max = std::max(weighted_max, sup * t * t);
        }
        bool ok = worst <= 1e-10 && weighted_max < 100.0;
        report(9, "spectral solver matches the explicit solution", ok,
               "single-mode sup error " + num(worst) + ", flat-data sup |w-w*| t^2 " +
                   num(weighted_max));
    }

    // ---- 10: profile module properties ------------------------------------
    {
        double kummer_worst = 0.0;
        for (double mu = 1.0 / 3.0; mu <= 0.9 + 1e-12; mu += (0.9 - 1.0 / 3.0) / 8.0)
            for (double xi = 0.0; xi <= 10.0; xi += 0.25) {
                double z = -0.5 * mu * xi * xi;
                double direct = xi * kummer_1f1(0.5 / mu, 1.5, z);
                double transformed =
                    xi * std::exp(z) * kummer_1f1(1.5 - 0.5 / mu, 1.5, -z);
                double ref = f_mu(ProfileSpec{.mu = mu}, xi);
                kummer_worst = std::max(kummer_worst, std::abs(direct - transformed) /
                                                          (1.0 + std::abs(ref)));
            }
        double closed_worst = 0.0;
        for (double xi = 0.0; xi <= 10.0; xi += 0.1)
            closed_worst = std::max(closed_worst,
                                    std::abs(f_mu(ProfileSpec{.mu = 1.0 / 3.0}, xi) -
                                             xi * std::exp(-xi * xi / 6.0)));
        double slope_half = f_mu_tail_exponent(ProfileSpec{.mu = 0.5}, 50.0, 200.0);
        double slope_23 = f_mu_tail_exponent(ProfileSpec{.mu = 2.0 / 3.0}, 50.0, 200.0);
        double euler_worst = 0.0;
        for (double z : {-2.0, -0.5, 0.0, 1.0, 3.0})
            euler_worst = std::max(euler_worst, std::abs(euler_integral_1f1(0.75, 1.5, z) -
                                                         kummer_1f1(0.75, 1.5, z)));
        bool ok = kummer_worst < 1e-10 && closed_worst < 1e-12 &&
                  std::abs(slope_half + 1.0) <= 0.05 && std::abs(slope_23 + 0.5) <= 0.05 &&
                  euler_worst < 1e-8;
        report(10, "profile family identities and tail laws", ok,
               "kummer residual " + num(kummer_worst) + ", closed-form " +
                   num(closed_worst) + ", slopes " + num(slope_half) + "/" +
                   num(slope_23) + ", euler " + num(euler_worst));
    }

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria failed\n", g_failures);
    return 1;
}

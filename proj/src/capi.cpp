#include "nld/nld.h"

#include <cmath>
#include <cstring>
#include <stdexcept>
#include <string>

#include "density_field.hpp"
#include "diagnostics.hpp"
#include "fd_solver.hpp"
#include "fit.hpp"
#include "initial_condition.hpp"
#include "interp.hpp"
#include "kernel_solver.hpp"
#include "mass_ode.hpp"
#include "profile.hpp"
#include "special_functions.hpp"
#include "spectral.hpp"

struct nld_ic {
    nld::InitialCondition ic;
};
struct nld_rescaling {
    nld::TimeRescaling resc;
};
struct nld_fd_result {
    nld::FdResult result;
    long nodes;
};
struct nld_spectral {
    nld::SpectralSolver solver;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
int wrap(Fn&& fn) {
    try {
        fn();
        return NLD_OK;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return NLD_ERR_INVALID;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return NLD_ERR_INVALID;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return NLD_ERR_NUMERIC;
    }
}

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

extern "C" {

const char* nld_version(void) { return "0.1.0"; }

const char* nld_last_error(void) { return g_last_error.c_str(); }

int nld_ic_from_json(const char* json, nld_ic** out) {
    return wrap([&] {
        require(json && out, "null argument");
        *out = new nld_ic{nld::InitialCondition::from_json(json)};
    });
}

void nld_ic_free(nld_ic* ic) { delete ic; }

int nld_ic_to_json(const nld_ic* ic, char* buffer, size_t size) {
    return wrap([&] {
        require(ic && buffer, "null argument");
        std::string text = ic->ic.to_json();
        require(text.size() + 1 <= size, "buffer too small");
        std::memcpy(buffer, text.c_str(), text.size() + 1);
    });
}

int nld_ic_sample(const nld_ic* ic, double length, long nodes, double* values) {
    return wrap([&] {
        require(ic && values, "null argument");
        nld::DensityField field = nld::sample_ic(ic->ic, nld::Grid1D(length, nodes));
        std::memcpy(values, field.values.data(), sizeof(double) * field.values.size());
    });
}

int nld_ic_analytic_moments(const nld_ic* ic, double* mass, double* m1,
                            double* m2, int* m1_unbounded) {
    return wrap([&] {
        require(ic, "null argument");
        nld::AnalyticMoments am = ic->ic.analytic_moments();
        if (mass) *mass = am.mass;
        if (m1) *m1 = am.m1 ? *am.m1 : std::nan("");
        if (m2) *m2 = am.m2 ? *am.m2 : std::nan("");
        if (m1_unbounded) *m1_unbounded = am.m1_unbounded ? 1 : 0;
    });
}

int nld_moments(const double* values, long n, double dx, double* mass,
                double* m1, double* m2, double* sup_norm) {
    return wrap([&] {
        require(values && n >= 3 && dx > 0, "bad samples");
        nld::DensityField field{nld::Grid1D(dx * (n - 1), n),
                                std::vector<double>(values, values + n), 0.0};
        nld::MomentRecord rec = nld::moments(field);
        if (mass) *mass = rec.mass;
        if (m1) *m1 = rec.m1;
        if (m2) *m2 = rec.m2;
        if (sup_norm) *sup_norm = rec.sup_norm;
    });
}

int nld_mass_ode_solve(const nld_ic* ic, double t_end, double rel_tol,
                       nld_rescaling** out) {
    return wrap([&] {
        require(ic && out, "null argument");
        nld::OdeControls controls;
        if (rel_tol > 0) controls.rel_tol = rel_tol;
        *out = new nld_rescaling{nld::MassOde(ic->ic).solve(t_end, controls)};
    });
}

void nld_rescaling_free(nld_rescaling* r) { delete r; }

long nld_rescaling_sample_count(const nld_rescaling* r) {
    return r ? static_cast<long>(r->resc.trajectory.t.size()) : 0;
}

int nld_rescaling_samples(const nld_rescaling* r, double* t, double* a, double* m) {
    return wrap([&] {
        require(r, "null argument");
        const auto& traj = r->resc.trajectory;
        size_t n = traj.t.size();
        if (t) std::memcpy(t, traj.t.data(), sizeof(double) * n);
        if (a) std::memcpy(a, traj.y.data(), sizeof(double) * n);
        if (m) std::memcpy(m, traj.dy.data(), sizeof(double) * n);
    });
}

int nld_rescaling_eval(const nld_rescaling* r, double t, double* a, double* m) {
    return wrap([&] {
        require(r, "null argument");
        if (a) *a = r->resc.a_at(t);
        if (m) *m = r->resc.mass_at(t);
    });
}

int nld_g_of_a(const nld_ic* ic, double a, double* out) {
    return wrap([&] {
        require(ic && out, "null argument");
        *out = nld::MassOde(ic->ic).G(a);
    });
}

int nld_f_of_a(const nld_ic* ic, double a, double* out) {
    return wrap([&] {
        require(ic && out, "null argument");
        *out = nld::MassOde(ic->ic).F(a);
    });
}

int nld_asymptotic_constant(const nld_ic* ic, double* c) {
    return wrap([&] {
        require(ic && c, "null argument");
        *c = nld::MassOde(ic->ic).asymptotic_constants().c;
    });
}

int nld_a_tail_exponent(const nld_rescaling* r, double t_lo, double t_hi,
                        double* slope) {
    return wrap([&] {
        require(r && slope, "null argument");
        *slope = nld::MassOde::tail_exponent(r->resc, t_lo, t_hi);
    });
}

int nld_kernel_eval(const nld_ic* ic, const nld_rescaling* r, double t,
                    const double* x, long n, double* u) {
    return wrap([&] {
        require(ic && r && x && u && n > 0, "bad arguments");
        // Arbitrary evaluation points: go through the point interface.
        nld::KernelRun run(ic->ic, r->resc, nld::Grid1D(1.0, 3));
        for (long i = 0; i < n; ++i) u[i] = run.evaluate_at(t, x[i]);
    });
}

int nld_kernel_flux_at_origin(const nld_ic* ic, const nld_rescaling* r,
                              double t, double* flux) {
    return wrap([&] {
        require(ic && r && flux, "null argument");
        nld::KernelRun run(ic->ic, r->resc, nld::Grid1D(1.0, 3));
        *flux = run.flux_at_origin(t);
    });
}

int nld_fd_run(const nld_ic* ic, double length, long nodes, double theta,
               double dt, double t_end, const double* output_times,
               long n_outputs, nld_fd_result** out) {
    return wrap([&] {
        require(ic && out, "null argument");
        require(n_outputs == 0 || output_times, "null output times");
        nld::FdConfig config{nld::Grid1D(length, nodes), t_end,
                             std::vector<double>(output_times, output_times + n_outputs),
                             dt, theta};
        *out = new nld_fd_result{nld::fd_run(config, ic->ic), nodes};
    });
}

void nld_fd_result_free(nld_fd_result* r) { delete r; }

int nld_fd_result_dt(const nld_fd_result* r, double* dt, double* stability_bound) {
    return wrap([&] {
        require(r, "null argument");
        if (dt) *dt = r->result.dt;
        if (stability_bound) *stability_bound = r->result.stability_bound;
    });
}

long nld_fd_result_output_count(const nld_fd_result* r) {
    return r ? static_cast<long>(r->result.outputs.size()) : 0;
}

int nld_fd_result_output(const nld_fd_result* r, long index, double* t,
                         double* values, double* a) {
    return wrap([&] {
        require(r, "null argument");
        require(index >= 0 && index < static_cast<long>(r->result.outputs.size()),
                "output index out of range");
        const nld::FdOutput& out = r->result.outputs[index];
        if (t) *t = out.field.time;
        if (values)
            std::memcpy(values, out.field.values.data(),
                        sizeof(double) * out.field.values.size());
        if (a) *a = out.a;
    });
}

long nld_fd_result_series_count(const nld_fd_result* r) {
    return r ? static_cast<long>(r->result.series.size()) : 0;
}

int nld_fd_result_series(const nld_fd_result* r, double* t, double* mass,
                         double* m1, double* m2, double* sup_norm, double* a) {
    return wrap([&] {
        require(r, "null argument");
        for (size_t i = 0; i < r->result.series.size(); ++i) {
            const nld::FdSeriesPoint& p = r->result.series[i];
            if (t) t[i] = p.t;
            if (mass) mass[i] = p.mass;
            if (m1) m1[i] = p.m1;
            if (m2) m2[i] = p.m2;
            if (sup_norm) sup_norm[i] = p.sup_norm;
            if (a) a[i] = p.a;
        }
    });
}

int nld_fd_result_boundary_loss(const nld_fd_result* r, double* mass_loss,
                                double* m1_loss) {
    return wrap([&] {
        require(r, "null argument");
        if (mass_loss) *mass_loss = r->result.boundary_mass_loss;
        if (m1_loss) *m1_loss = r->result.boundary_m1_loss;
    });
}

int nld_spectral_create(const double* coefficients, long n_modes, nld_spectral** out) {
    return wrap([&] {
        require(coefficients && out && n_modes > 0, "bad arguments");
        *out = new nld_spectral{
            nld::SpectralSolver({coefficients, coefficients + n_modes})};
    });
}

int nld_spectral_from_ic(const nld_ic* ic, long n_modes, nld_spectral** out) {
    return wrap([&] {
        require(ic && out, "null argument");
        *out = new nld_spectral{
            nld::SpectralSolver::from_ic(ic->ic, static_cast<int>(n_modes))};
    });
}

void nld_spectral_free(nld_spectral* s) { delete s; }

int nld_spectral_coefficient(const nld_spectral* s, long mode, double* w0) {
    return wrap([&] {
        require(s && w0, "null argument");
        require(mode >= 1 && mode <= static_cast<long>(s->solver.coefficients().size()),
                "mode out of range");
        *w0 = s->solver.coefficients()[mode - 1];
    });
}

int nld_spectral_mass0(const nld_spectral* s, double* mass) {
    return wrap([&] {
        require(s && mass, "null argument");
        *mass = s->solver.mass0();
    });
}

int nld_spectral_solve(nld_spectral* s, double t_end, double rel_tol) {
    return wrap([&] {
        require(s, "null argument");
        nld::OdeControls controls{1e-12, 1e-14};
        if (rel_tol > 0) controls.rel_tol = rel_tol;
        s->solver.solve(t_end, controls);
    });
}

int nld_spectral_a(const nld_spectral* s, double t, double* a, double* m) {
    return wrap([&] {
        require(s, "null argument");
        if (a) *a = s->solver.a_at(t);
        if (m) *m = s->solver.mass_at(t);
    });
}

int nld_spectral_eval(const nld_spectral* s, double t, const double* x, long n,
                      double* w) {
    return wrap([&] {
        require(s && x && w && n > 0, "bad arguments");
        for (long i = 0; i < n; ++i) w[i] = s->solver.evaluate_at(t, x[i]);
    });
}

int nld_spectral_K(const nld_spectral* s, double* K) {
    return wrap([&] {
        require(s && K, "null argument");
        *K = s->solver.compute_K();
    });
}

int nld_f_mu(double mu, const double* xi, long n, double* out) {
    return wrap([&] {
        require(xi && out && n > 0, "bad arguments");
        nld::ProfileSpec spec;
        spec.mu = mu;
        for (long i = 0; i < n; ++i) out[i] = nld::f_mu(spec, xi[i]);
    });
}

int nld_kummer_1f1(double alpha, double beta, double z, double tol, double* out) {
    return wrap([&] {
        require(out, "null argument");
        *out = nld::kummer_1f1(alpha, beta, z, tol > 0 ? tol : 1e-14);
    });
}

int nld_euler_integral_1f1(double alpha, double beta, double z, double* out) {
    return wrap([&] {
        require(out, "null argument");
        *out = nld::euler_integral_1f1(alpha, beta, z);
    });
}

int nld_f_mu_tail_exponent(double mu, double xi_lo, double xi_hi, double* slope) {
    return wrap([&] {
        require(slope, "null argument");
        nld::ProfileSpec spec;
        spec.mu = mu;
        *slope = nld::f_mu_tail_exponent(spec, xi_lo, xi_hi);
    });
}

int nld_attractor(double m1, double a, const double* x, long n, double* out) {
    return wrap([&] {
        require(x && out && n > 0, "bad arguments");
        nld::AttractorParams params{m1, a};
        for (long i = 0; i < n; ++i) out[i] = nld::attractor(params, x[i]);
    });
}

int nld_loglog_slope(const double* t, const double* value, long n, double t_lo,
                     double t_hi, double* slope, double* intercept,
                     double* residual_rms, long* used) {
    return wrap([&] {
        require(t && value && n > 0, "bad arguments");
        nld::SlopeFit fit = nld::loglog_slope({t, t + n}, {value, value + n}, t_lo, t_hi);
        if (slope) *slope = fit.slope;
        if (intercept) *intercept = fit.intercept;
        if (residual_rms) *residual_rms = fit.residual_rms;
        if (used) *used = fit.count;
    });
}

int nld_collapse_distance(const double* x, const double* u, long n, double a,
                          double m1, double eta_max, long n_eta, double* distance) {
    return wrap([&] {
        require(x && u && distance && n >= 2 && n_eta >= 2, "bad arguments");
        require(a > 0, "collapse: a must be positive");
        require(m1 > 0, "collapse: m1 must be positive");
        nld::MonotoneCubic interp({x, x + static_cast<size_t>(n)},
                                  {u, u + static_cast<size_t>(n)});
        double sqrt_a = std::sqrt(a);
        double d = 0.0;
        for (long i = 0; i <= n_eta; ++i) {
            double eta = eta_max * i / n_eta;
            double target =
                m1 / (2.0 * std::sqrt(M_PI)) * eta * std::exp(-0.25 * eta * eta);
            d = std::max(d, std::abs(a * interp(eta * sqrt_a) - target));
        }
        *distance = d;
    });
}

int nld_attractor_error(const double* x, const double* u, long n, double a,
                        double m1, double* error) {
    return wrap([&] {
        require(x && u && error && n > 0, "bad arguments");
        nld::AttractorParams params{m1, a};
        double err = 0.0;
        for (long i = 0; i < n; ++i)
            err = std::max(err, std::abs(u[i] - nld::attractor(params, x[i])));
        *error = err;
    });
}

int nld_phi_kernel_bound(double x_max, double y_max, double spacing, double* bound) {
    return wrap([&] {
        require(bound, "null argument");
        *bound = nld::phi_kernel_bound(x_max, y_max, spacing);
    });
}

}  // extern "C"

/* C API for the nonlocal diffusion laboratory.
 *
 * All functions return NLD_OK (0) on success. On failure they return an
 * error code and leave a message retrievable via nld_last_error() on the
 * calling thread. Handles are opaque and freed with the matching _free().
 */
#ifndef NLD_H
#define NLD_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define NLD_OK 0
#define NLD_ERR_INVALID 2 /* invalid input / domain error */
#define NLD_ERR_NUMERIC 3 /* tolerance or convergence failure */

typedef struct nld_ic nld_ic;               /* initial condition */
typedef struct nld_rescaling nld_rescaling; /* a(t) trajectory */
typedef struct nld_fd_result nld_fd_result; /* completed FD run */
typedef struct nld_spectral nld_spectral;   /* bounded-domain sine-series solver */

const char* nld_version(void);
const char* nld_last_error(void);

/* ---- initial conditions -------------------------------------------- */

/* JSON form: {"variant": "indicator|scaled_sine|power_tail|self_similar_seed|
 * tabulated", "params": {...}} */
int nld_ic_from_json(const char* json, nld_ic** out);
void nld_ic_free(nld_ic* ic);
int nld_ic_to_json(const nld_ic* ic, char* buffer, size_t size);

/* Pointwise samples of u_in on the uniform grid [0, length], `nodes` values. */
int nld_ic_sample(const nld_ic* ic, double length, long nodes, double* values);

/* Closed-form moments; m1_unbounded is set for heavy-tail data (m1/m2 then
 * carry NaN). Fails for tabulated data. */
int nld_ic_analytic_moments(const nld_ic* ic, double* mass, double* m1,
                            double* m2, int* m1_unbounded);

/* Trapezoid moments of samples on a uniform grid with spacing dx. */
int nld_moments(const double* values, long n, double dx, double* mass,
                double* m1, double* m2, double* sup_norm);

/* ---- mass ODE: a' = M(0) - F(a) ------------------------------------- */

int nld_mass_ode_solve(const nld_ic* ic, double t_end, double rel_tol,
                       nld_rescaling** out);
void nld_rescaling_free(nld_rescaling* r);
long nld_rescaling_sample_count(const nld_rescaling* r);
int nld_rescaling_samples(const nld_rescaling* r, double* t, double* a, double* m);
int nld_rescaling_eval(const nld_rescaling* r, double t, double* a, double* m);
int nld_g_of_a(const nld_ic* ic, double a, double* out);
int nld_f_of_a(const nld_ic* ic, double a, double* out);
/* Predicted constant c = (3 M1 / (2 sqrt(pi)))^{2/3}. */
int nld_asymptotic_constant(const nld_ic* ic, double* c);
/* log-log slope of a(t) over [t_lo, t_hi] (window >= 1 decade). */
int nld_a_tail_exponent(const nld_rescaling* r, double t_lo, double t_hi,
                        double* slope);

/* ---- kernel solver --------------------------------------------------- */

int nld_kernel_eval(const nld_ic* ic, const nld_rescaling* r, double t,
                    const double* x, long n, double* u);
int nld_kernel_flux_at_origin(const nld_ic* ic, const nld_rescaling* r,
                              double t, double* flux);

/* ---- explicit finite differences on [0, L] --------------------------- */

/* dt <= 0 selects theta * dx^2 / (2 M(0)). */
int nld_fd_run(const nld_ic* ic, double length, long nodes, double theta,
               double dt, double t_end, const double* output_times,
               long n_outputs, nld_fd_result** out);
void nld_fd_result_free(nld_fd_result* r);
int nld_fd_result_dt(const nld_fd_result* r, double* dt, double* stability_bound);
long nld_fd_result_output_count(const nld_fd_result* r);
/* values must hold `nodes` doubles. */
int nld_fd_result_output(const nld_fd_result* r, long index, double* t,
                         double* values, double* a);
long nld_fd_result_series_count(const nld_fd_result* r);
/* Each array must hold series_count doubles; any may be NULL. */
int nld_fd_result_series(const nld_fd_result* r, double* t, double* mass,
                         double* m1, double* m2, double* sup_norm, double* a);
int nld_fd_result_boundary_loss(const nld_fd_result* r, double* mass_loss,
                                double* m1_loss);

/* ---- bounded-domain spectral solver on (0, pi) ----------------------- */

int nld_spectral_create(const double* coefficients, long n_modes, nld_spectral** out);
int nld_spectral_from_ic(const nld_ic* ic, long n_modes, nld_spectral** out);
void nld_spectral_free(nld_spectral* s);
int nld_spectral_coefficient(const nld_spectral* s, long mode, double* w0);
int nld_spectral_mass0(const nld_spectral* s, double* mass);
int nld_spectral_solve(nld_spectral* s, double t_end, double rel_tol);
int nld_spectral_a(const nld_spectral* s, double t, double* a, double* m);
int nld_spectral_eval(const nld_spectral* s, double t, const double* x, long n,
                      double* w);
int nld_spectral_K(const nld_spectral* s, double* K);

/* ---- self-similar profile family ------------------------------------ */

int nld_f_mu(double mu, const double* xi, long n, double* out);
int nld_kummer_1f1(double alpha, double beta, double z, double tol, double* out);
int nld_euler_integral_1f1(double alpha, double beta, double z, double* out);
int nld_f_mu_tail_exponent(double mu, double xi_lo, double xi_hi, double* slope);
int nld_attractor(double m1, double a, const double* x, long n, double* out);

/* ---- diagnostics ------------------------------------------------------ */

int nld_loglog_slope(const double* t, const double* value, long n, double t_lo,
                     double t_hi, double* slope, double* intercept,
                     double* residual_rms, long* used);
/* Rescaled sup-distance of samples (x, u) at bandwidth a to the attractor. */
int nld_collapse_distance(const double* x, const double* u, long n, double a,
                          double m1, double eta_max, long n_eta, double* distance);
int nld_attractor_error(const double* x, const double* u, long n, double a,
                        double m1, double* error);
int nld_phi_kernel_bound(double x_max, double y_max, double spacing, double* bound);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NLD_H */

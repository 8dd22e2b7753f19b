#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "nld/nld.h"

namespace {

const char* kIndicator = R"({"variant":"indicator","params":{"a":1.0,"b":2.0}})";

struct IcHandle {
    nld_ic* ptr = nullptr;
    explicit IcHandle(const char* json) { REQUIRE(nld_ic_from_json(json, &ptr) == NLD_OK); }
    ~IcHandle() { nld_ic_free(ptr); }
};

}  // namespace

TEST_CASE("version and error strings exist") {
    CHECK(std::string(nld_version()) == "0.1.0");
    CHECK(nld_last_error() != nullptr);
}

TEST_CASE("ic round trip through JSON") {
    IcHandle ic(kIndicator);
    char buffer[256];
    REQUIRE(nld_ic_to_json(ic.ptr, buffer, sizeof buffer) == NLD_OK);
    nld_ic* again = nullptr;
    REQUIRE(nld_ic_from_json(buffer, &again) == NLD_OK);
    nld_ic_free(again);

    nld_ic* bad = nullptr;
    CHECK(nld_ic_from_json("{\"variant\":\"nope\"}", &bad) == NLD_ERR_INVALID);
    CHECK(bad == nullptr);
    CHECK(std::strlen(nld_last_error()) > 0);
    CHECK(nld_ic_from_json("not json", &bad) == NLD_ERR_INVALID);
}

TEST_CASE("ic sampling and moments") {
    IcHandle ic(kIndicator);
    std::vector<double> values(4001);
    REQUIRE(nld_ic_sample(ic.ptr, 4.0, 4001, values.data()) == NLD_OK);
    CHECK(values[0] == 0.0);
    double mass, m1, m2, sup;
    REQUIRE(nld_moments(values.data(), 4001, 4.0 / 4000, &mass, &m1, &m2, &sup) == NLD_OK);
    CHECK(mass == doctest::Approx(1.0).epsilon(3e-3));
    CHECK(sup == 1.0);

    int unbounded = -1;
    REQUIRE(nld_ic_analytic_moments(ic.ptr, &mass, &m1, &m2, &unbounded) == NLD_OK);
    CHECK(mass == doctest::Approx(1.0));
    CHECK(m1 == doctest::Approx(1.5));
    CHECK(unbounded == 0);

    IcHandle tail(R"({"variant":"power_tail","params":{"delta":1.5}})");
    REQUIRE(nld_ic_analytic_moments(tail.ptr, &mass, &m1, &m2, &unbounded) == NLD_OK);
    CHECK(unbounded == 1);
    CHECK(std::isnan(m1));
}

TEST_CASE("mass ODE through the C API") {
    IcHandle ic(kIndicator);
    double g = 0.0;
    REQUIRE(nld_g_of_a(ic.ptr, 1.0, &g) == NLD_OK);
    CHECK(g == doctest::Approx((std::exp(-0.25) - std::exp(-1.0)) / std::sqrt(M_PI))
                   .epsilon(1e-12));
    CHECK(nld_g_of_a(ic.ptr, -1.0, &g) == NLD_ERR_INVALID);

    double f = -1.0;
    REQUIRE(nld_f_of_a(ic.ptr, 0.0, &f) == NLD_OK);
    CHECK(f == 0.0);

    double c = 0.0;
    REQUIRE(nld_asymptotic_constant(ic.ptr, &c) == NLD_OK);
    CHECK(c == doctest::Approx(1.1724).epsilon(1e-3));

    nld_rescaling* resc = nullptr;
    REQUIRE(nld_mass_ode_solve(ic.ptr, 1e5, 1e-8, &resc) == NLD_OK);
    double a, m;
    REQUIRE(nld_rescaling_eval(resc, 0.0, &a, &m) == NLD_OK);
    CHECK(a == 0.0);
    CHECK(m == doctest::Approx(1.0).epsilon(1e-10));

    long count = nld_rescaling_sample_count(resc);
    CHECK(count > 10);
    std::vector<double> t(count), av(count), mv(count);
    REQUIRE(nld_rescaling_samples(resc, t.data(), av.data(), mv.data()) == NLD_OK);
    CHECK(t.front() == 0.0);
    CHECK(t.back() == doctest::Approx(1e5).epsilon(1e-12));

    double slope = 0.0;
    REQUIRE(nld_a_tail_exponent(resc, 1e4, 1e5, &slope) == NLD_OK);
    CHECK(slope == doctest::Approx(2.0 / 3.0).epsilon(0.03));
    CHECK(nld_a_tail_exponent(resc, 1e4, 2e4, &slope) == NLD_ERR_INVALID);

    CHECK(nld_rescaling_eval(resc, 2e5, &a, &m) == NLD_ERR_INVALID);
    nld_rescaling_free(resc);
}

TEST_CASE("kernel evaluation through the C API") {
    IcHandle ic(kIndicator);
    nld_rescaling* resc = nullptr;
    REQUIRE(nld_mass_ode_solve(ic.ptr, 100.0, 1e-8, &resc) == NLD_OK);
    double x[3] = {0.0, 1.5, 3.0};
    double u[3];
    REQUIRE(nld_kernel_eval(ic.ptr, resc, 10.0, x, 3, u) == NLD_OK);
    CHECK(u[0] == 0.0);
    CHECK(u[1] > 0.0);
    double flux, a, m;
    REQUIRE(nld_kernel_flux_at_origin(ic.ptr, resc, 10.0, &flux) == NLD_OK);
    REQUIRE(nld_rescaling_eval(resc, 10.0, &a, &m) == NLD_OK);
    double g;
    REQUIRE(nld_g_of_a(ic.ptr, a, &g) == NLD_OK);
    CHECK(flux == doctest::Approx(g).epsilon(1e-10));
    nld_rescaling_free(resc);
}

TEST_CASE("FD run through the C API") {
    IcHandle ic(kIndicator);
    nld_fd_result* result = nullptr;
    double outputs[2] = {1.0, 5.0};
    REQUIRE(nld_fd_run(ic.ptr, 40.0, 201, 0.9, 0.0, 5.0, outputs, 2, &result) == NLD_OK);
    double dt, bound;
    REQUIRE(nld_fd_result_dt(result, &dt, &bound) == NLD_OK);
    CHECK(dt == doctest::Approx(0.9 * bound));
    CHECK(nld_fd_result_output_count(result) == 2);

    std::vector<double> values(201);
    double t, a;
    REQUIRE(nld_fd_result_output(result, 1, &t, values.data(), &a) == NLD_OK);
    CHECK(t == doctest::Approx(5.0).epsilon(dt));
    CHECK(values[0] == 0.0);
    CHECK(nld_fd_result_output(result, 7, &t, values.data(), &a) == NLD_ERR_INVALID);

    long n = nld_fd_result_series_count(result);
    CHECK(n > 3);
    std::vector<double> st(n), sm(n);
    REQUIRE(nld_fd_result_series(result, st.data(), sm.data(), nullptr, nullptr,
                                 nullptr, nullptr) == NLD_OK);
    CHECK(st.front() == 0.0);
    CHECK(sm.front() >= sm.back());

    double mass_loss, m1_loss;
    REQUIRE(nld_fd_result_boundary_loss(result, &mass_loss, &m1_loss) == NLD_OK);
    CHECK(mass_loss >= 0.0);
    nld_fd_result_free(result);

    // Unstable explicit dt is rejected up front.
    CHECK(nld_fd_run(ic.ptr, 40.0, 201, 0.9, 1.0, 5.0, outputs, 2, &result) ==
          NLD_ERR_INVALID);
}

TEST_CASE("spectral solver through the C API") {
    IcHandle sine(R"({"variant":"scaled_sine","params":{"mass":2.0}})");
    nld_spectral* s = nullptr;
    REQUIRE(nld_spectral_from_ic(sine.ptr, 16, &s) == NLD_OK);
    double w0, mass;
    REQUIRE(nld_spectral_coefficient(s, 1, &w0) == NLD_OK);
    CHECK(w0 == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(nld_spectral_mass0(s, &mass) == NLD_OK);
    CHECK(mass == doctest::Approx(2.0).epsilon(1e-12));

    REQUIRE(nld_spectral_solve(s, 10.0, 1e-12) == NLD_OK);
    double a, m;
    REQUIRE(nld_spectral_a(s, 0.5, &a, &m) == NLD_OK);
    CHECK(a == doctest::Approx(std::log(2.0)).epsilon(1e-9));

    double x = M_PI_2, w;
    REQUIRE(nld_spectral_eval(s, 0.5, &x, 1, &w) == NLD_OK);
    CHECK(w == doctest::Approx(0.5).epsilon(1e-9));

    double K;
    REQUIRE(nld_spectral_K(s, &K) == NLD_OK);
    CHECK(K == doctest::Approx(0.5).epsilon(1e-12));
    nld_spectral_free(s);

    double coeffs[2] = {-1.0, 0.0};
    REQUIRE(nld_spectral_create(coeffs, 2, &s) == NLD_OK);
    CHECK(nld_spectral_solve(s, 1.0, 1e-10) == NLD_ERR_INVALID);
    nld_spectral_free(s);
}

TEST_CASE("profile functions through the C API") {
    double xi[2] = {0.0, 1.0};
    double out[2];
    REQUIRE(nld_f_mu(1.0 / 3.0, xi, 2, out) == NLD_OK);
    CHECK(out[0] == 0.0);
    CHECK(out[1] == doctest::Approx(std::exp(-1.0 / 6.0)).epsilon(1e-12));
    CHECK(nld_f_mu(1.5, xi, 2, out) == NLD_ERR_INVALID);

    double v;
    REQUIRE(nld_kummer_1f1(1.5, 1.5, -1.0, 1e-14, &v) == NLD_OK);
    CHECK(v == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(nld_kummer_1f1(1.0, -2.0, 1.0, 1e-14, &v) == NLD_ERR_INVALID);

    REQUIRE(nld_euler_integral_1f1(1.0, 2.0, 0.0, &v) == NLD_OK);
    CHECK(v == doctest::Approx(1.0).epsilon(1e-10));

    double slope;
    REQUIRE(nld_f_mu_tail_exponent(0.5, 50.0, 200.0, &slope) == NLD_OK);
    CHECK(slope == doctest::Approx(-1.0).epsilon(0.05));

    double xs[2] = {0.0, std::sqrt(2.0)};
    double att[2];
    REQUIRE(nld_attractor(1.5, 1.0, xs, 2, att) == NLD_OK);
    CHECK(att[1] == doctest::Approx(1.5 / std::sqrt(2.0 * M_E * M_PI)).epsilon(1e-12));
}

TEST_CASE("diagnostics through the C API") {
    std::vector<double> t, v;
    for (int i = 0; i < 30; ++i) {
        t.push_back(std::pow(10.0, 1.0 + i / 9.0));
        v.push_back(5.0 * std::pow(t.back(), -0.5));
    }
    double slope, intercept, rms;
    long used;
    REQUIRE(nld_loglog_slope(t.data(), v.data(), 30, 10.0, 1e4, &slope, &intercept,
                             &rms, &used) == NLD_OK);
    CHECK(slope == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(used >= 10);

    // Attractor samples have zero distance and zero error.
    double m1 = 1.5, a = 1.0;
    std::vector<double> x, u;
    for (int j = 0; j <= 600; ++j) {
        x.push_back(j * 0.05);
        u.push_back(m1 * x.back() / (2.0 * std::sqrt(M_PI)) *
                    std::exp(-x.back() * x.back() / (4.0 * a)));
    }
    double d;
    REQUIRE(nld_collapse_distance(x.data(), u.data(), 601, a, m1, 10.0, 400, &d) ==
            NLD_OK);
    CHECK(d < 1e-3);  // limited by the monotone-cubic resampling
    double err;
    REQUIRE(nld_attractor_error(x.data(), u.data(), 601, a, m1, &err) == NLD_OK);
    CHECK(err < 1e-12);

    double bound;
    REQUIRE(nld_phi_kernel_bound(5.0, 5.0, 0.05, &bound) == NLD_OK);
    CHECK(bound > 0.0);
}

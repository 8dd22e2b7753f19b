// Command-line front end for the nonlocal diffusion laboratory.
//
// Subcommands: simulate, mass-ode, diagnose, profile. All numerical work
// goes through the shared-library C API; this file only does argument
// handling, CSV/JSON I/O, and exit-code policy (0 ok, 2 invalid input,
// 3 numerical failure).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nld/nld.h"

using nlohmann::json;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitNumeric = 3;

struct CliError : std::runtime_error {
    int code;
    CliError(int code, std::string msg) : std::runtime_error(std::move(msg)), code(code) {}
};

void check(int rc) {
    if (rc != NLD_OK) throw CliError(rc == NLD_ERR_INVALID ? kExitInvalid : kExitNumeric,
                                     nld_last_error());
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// The ic flag accepts inline JSON or a path to a JSON file.
std::string load_ic_spec(const std::string& arg) {
    if (arg.empty()) throw CliError(kExitInvalid, "missing initial condition");
    if (arg.front() == '{') return arg;
    std::ifstream in(arg);
    if (!in) throw CliError(kExitInvalid, "cannot read ic file: " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct IcHandle {
    nld_ic* ptr = nullptr;
    explicit IcHandle(const std::string& spec) {
        check(nld_ic_from_json(spec.c_str(), &ptr));
    }
    ~IcHandle() { nld_ic_free(ptr); }
    IcHandle(const IcHandle&) = delete;
    IcHandle& operator=(const IcHandle&) = delete;
};

std::ofstream open_out(const std::string& dir, const std::string& name) {
    std::filesystem::create_directories(dir);
    std::string path = dir + "/" + name;
    std::ofstream out(path);
    if (!out) throw CliError(kExitInvalid, "cannot write " + path);
    return out;
}

void write_profile_csv(std::ofstream& out, const std::vector<double>& x,
                       const std::vector<double>& u) {
    out << "x,u\n";
    for (size_t j = 0; j < x.size(); ++j) out << fmt(x[j]) << ',' << fmt(u[j]) << '\n';
}

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;

    std::vector<double>& col(const std::string& name) {
        for (size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return columns[i];
        throw CliError(kExitInvalid, "CSV column not found: " + name);
    }
};

Csv read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError(kExitInvalid, "cannot read " + path);
    Csv csv;
    std::string line;
    if (!std::getline(in, line)) throw CliError(kExitInvalid, "empty CSV: " + path);
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) csv.header.push_back(cell);
    csv.columns.resize(csv.header.size());
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        size_t i = 0;
        while (std::getline(ls, cell, ',')) {
            if (i >= csv.columns.size())
                throw CliError(kExitInvalid, "ragged CSV row in " + path);
            try {
                csv.columns[i++].push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw CliError(kExitInvalid, "non-numeric CSV cell in " + path);
            }
        }
        if (i != csv.columns.size())
            throw CliError(kExitInvalid, "ragged CSV row in " + path);
    }
    if (csv.columns.empty() || csv.columns[0].empty())
        throw CliError(kExitInvalid, "no data rows in " + path);
    return csv;
}

// Linear interpolation on tabulated (t, v) with increasing t.
double interp_column(const std::vector<double>& t, const std::vector<double>& v,
                     double at) {
    if (at < t.front() || at > t.back())
        throw CliError(kExitInvalid, "time " + fmt(at) + " outside tabulated range");
    auto it = std::lower_bound(t.begin(), t.end(), at);
    size_t hi = std::min<size_t>(it - t.begin(), t.size() - 1);
    if (hi == 0) return v.front();
    size_t lo = hi - 1;
    double w = (at - t[lo]) / (t[hi] - t[lo]);
    return (1.0 - w) * v[lo] + w * v[hi];
}

struct SimulateOpts {
    std::string solver = "fd";
    std::string ic;
    double length = 400.0;
    long nodes = 2001;
    double t_end = 0.0;
    std::vector<double> outputs;
    double theta = 0.9;
    double dt = 0.0;
    long modes = 64;
    double rel_tol = 1e-8;
    std::string out_dir = ".";
    std::string label = "run";
};

json opts_to_json(const SimulateOpts& o) {
    return json{{"solver", o.solver},   {"ic", json::parse(load_ic_spec(o.ic))},
                {"L", o.length},        {"nx", o.nodes},
                {"t_end", o.t_end},     {"outputs", o.outputs},
                {"theta", o.theta},     {"dt", o.dt},
                {"modes", o.modes},     {"rel_tol", o.rel_tol},
                {"out_dir", o.out_dir}, {"label", o.label}};
}

void apply_config(const std::string& path, SimulateOpts& o) {
    std::ifstream in(path);
    if (!in) throw CliError(kExitInvalid, "cannot read config: " + path);
    json cfg;
    try {
        in >> cfg;
    } catch (const json::exception& e) {
        throw CliError(kExitInvalid, std::string("bad config JSON: ") + e.what());
    }
    if (cfg.contains("solver")) o.solver = cfg["solver"];
    if (cfg.contains("ic")) o.ic = cfg["ic"].is_string() ? cfg["ic"].get<std::string>()
                                                         : cfg["ic"].dump();
    if (cfg.contains("L")) o.length = cfg["L"];
    if (cfg.contains("nx")) o.nodes = cfg["nx"];
    if (cfg.contains("t_end")) o.t_end = cfg["t_end"];
    if (cfg.contains("outputs")) o.outputs = cfg["outputs"].get<std::vector<double>>();
    if (cfg.contains("theta")) o.theta = cfg["theta"];
    if (cfg.contains("dt")) o.dt = cfg["dt"];
    if (cfg.contains("modes")) o.modes = cfg["modes"];
    if (cfg.contains("rel_tol")) o.rel_tol = cfg["rel_tol"];
    if (cfg.contains("out_dir")) o.out_dir = cfg["out_dir"];
    if (cfg.contains("label")) o.label = cfg["label"];
}

void write_manifest(const SimulateOpts& o, json derived, double seconds) {
    derived["version"] = nld_version();
    derived["wall_seconds"] = seconds;
    json manifest{{"config", opts_to_json(o)}, {"derived", derived}};
    auto out = open_out(o.out_dir, "manifest.json");
    out << manifest.dump(2) << '\n';
}

void moments_header(std::ofstream& out) { out << "t,M,M1,M2,supnorm\n"; }

void moments_row(std::ofstream& out, double t, const std::vector<double>& u, long n,
                 double dx) {
    double mass, m1, m2, sup;
    check(nld_moments(u.data(), n, dx, &mass, &m1, &m2, &sup));
    out << fmt(t) << ',' << fmt(mass) << ',' << fmt(m1) << ',' << fmt(m2) << ','
        << fmt(sup) << '\n';
}

int run_simulate(SimulateOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    IcHandle ic(load_ic_spec(o.ic));
    if (!(o.t_end > 0.0)) throw CliError(kExitInvalid, "t_end must be positive");
    if (o.outputs.empty()) o.outputs = {o.t_end};
    std::sort(o.outputs.begin(), o.outputs.end());

    double m0, m1_0, m2_0;
    int m1_unbounded = 0;
    json derived;
    if (nld_ic_analytic_moments(ic.ptr, &m0, &m1_0, &m2_0, &m1_unbounded) == NLD_OK) {
        derived["M0"] = m0;
        if (!m1_unbounded && !std::isnan(m1_0)) {
            derived["M1"] = m1_0;
            double c;
            if (nld_asymptotic_constant(ic.ptr, &c) == NLD_OK) derived["c_predicted"] = c;
        }
    }

    if (o.solver == "fd") {
        nld_fd_result* result = nullptr;
        check(nld_fd_run(ic.ptr, o.length, o.nodes, o.theta, o.dt, o.t_end,
                         o.outputs.data(), static_cast<long>(o.outputs.size()), &result));
        double dt, bound;
        check(nld_fd_result_dt(result, &dt, &bound));
        derived["dt"] = dt;
        derived["stability_bound"] = bound;
        derived["theta"] = o.theta;

        double dx = o.length / (o.nodes - 1);
        std::vector<double> x(o.nodes), u(o.nodes);
        for (long j = 0; j < o.nodes; ++j) x[j] = j * dx;
        long n_out = nld_fd_result_output_count(result);
        for (long i = 0; i < n_out; ++i) {
            double t, a;
            check(nld_fd_result_output(result, i, &t, u.data(), &a));
            auto out = open_out(o.out_dir, "profile_" + std::to_string(i) + ".csv");
            write_profile_csv(out, x, u);
        }
        long n = nld_fd_result_series_count(result);
        std::vector<double> st(n), sm(n), sm1(n), sm2(n), ssup(n);
        check(nld_fd_result_series(result, st.data(), sm.data(), sm1.data(), sm2.data(),
                                   ssup.data(), nullptr));
        auto mout = open_out(o.out_dir, "moments.csv");
        moments_header(mout);
        for (long i = 0; i < n; ++i)
            mout << fmt(st[i]) << ',' << fmt(sm[i]) << ',' << fmt(sm1[i]) << ','
                 << fmt(sm2[i]) << ',' << fmt(ssup[i]) << '\n';
        double mass_loss, m1_loss;
        check(nld_fd_result_boundary_loss(result, &mass_loss, &m1_loss));
        derived["boundary_mass_loss"] = mass_loss;
        derived["boundary_m1_loss"] = m1_loss;
        nld_fd_result_free(result);
    } else if (o.solver == "kernel") {
        nld_rescaling* resc = nullptr;
        check(nld_mass_ode_solve(ic.ptr, o.t_end, o.rel_tol, &resc));
        double dx = o.length / (o.nodes - 1);
        std::vector<double> x(o.nodes), u(o.nodes);
        for (long j = 0; j < o.nodes; ++j) x[j] = j * dx;
        auto mout = open_out(o.out_dir, "moments.csv");
        moments_header(mout);
        int rc = NLD_OK;
        for (size_t i = 0; i < o.outputs.size() && rc == NLD_OK; ++i) {
            double t = o.outputs[i];
            rc = nld_kernel_eval(ic.ptr, resc, t, x.data(), o.nodes, u.data());
            if (rc == NLD_OK) {
                auto out = open_out(o.out_dir, "profile_" + std::to_string(i) + ".csv");
                write_profile_csv(out, x, u);
                moments_row(mout, t, u, o.nodes, dx);
            }
        }
        nld_rescaling_free(resc);
        check(rc);
    } else if (o.solver == "spectral") {
        nld_spectral* s = nullptr;
        check(nld_spectral_from_ic(ic.ptr, o.modes, &s));
        int rc = nld_spectral_solve(s, o.t_end, o.rel_tol);
        double dx = M_PI / (o.nodes - 1);
        std::vector<double> x(o.nodes), u(o.nodes);
        for (long j = 0; j < o.nodes; ++j) x[j] = j * dx;
        std::ofstream mout;
        if (rc == NLD_OK) {
            mout = open_out(o.out_dir, "moments.csv");
            moments_header(mout);
        }
        for (size_t i = 0; i < o.outputs.size() && rc == NLD_OK; ++i) {
            double t = o.outputs[i];
            rc = nld_spectral_eval(s, t, x.data(), o.nodes, u.data());
            if (rc == NLD_OK) {
                auto out = open_out(o.out_dir, "profile_" + std::to_string(i) + ".csv");
                write_profile_csv(out, x, u);
                moments_row(mout, t, u, o.nodes, dx);
            }
        }
        if (rc == NLD_OK) {
            double K;
            if (nld_spectral_K(s, &K) == NLD_OK) derived["K"] = K;
            double mass;
            check(nld_spectral_mass0(s, &mass));
            derived["M0"] = mass;
        }
        nld_spectral_free(s);
        check(rc);
    } else {
        throw CliError(kExitInvalid, "unknown solver: " + o.solver);
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_manifest(o, derived, seconds);
    return 0;
}

int run_mass_ode(const std::string& ic_arg, double t_end, double rel_tol,
                 double fit_lo, double fit_hi, const std::string& out_dir) {
    IcHandle ic(load_ic_spec(ic_arg));
    if (!(t_end > 0.0)) throw CliError(kExitInvalid, "t_end must be positive");
    nld_rescaling* resc = nullptr;
    check(nld_mass_ode_solve(ic.ptr, t_end, rel_tol, &resc));
    long n = nld_rescaling_sample_count(resc);
    std::vector<double> t(n), a(n), m(n);
    check(nld_rescaling_samples(resc, t.data(), a.data(), m.data()));
    auto out = open_out(out_dir, "mass_ode.csv");
    out << "t,a,M\n";
    for (long i = 0; i < n; ++i)
        out << fmt(t[i]) << ',' << fmt(a[i]) << ',' << fmt(m[i]) << '\n';

    if (fit_lo <= 0.0) fit_lo = t_end / 10.0;
    if (fit_hi <= 0.0) fit_hi = t_end;
    json summary;
    double c;
    if (nld_asymptotic_constant(ic.ptr, &c) == NLD_OK) summary["c_predicted"] = c;
    double slope;
    int rc = nld_a_tail_exponent(resc, fit_lo, fit_hi, &slope);
    nld_rescaling_free(resc);
    check(rc);
    summary["exponent_fitted"] = slope;
    // c fitted from the last sample: a(t) ~ c t^{2/3}.
    summary["c_fitted"] = a[n - 1] / std::pow(t[n - 1], 2.0 / 3.0);
    summary["version"] = nld_version();
    auto sout = open_out(out_dir, "summary.json");
    sout << summary.dump(2) << '\n';
    return 0;
}

struct DiagnoseOpts {
    std::string moments_path;
    std::string mass_ode_path;
    std::vector<std::string> profiles;  // TIME=PATH
    double window_lo = 0.0;
    double window_hi = 0.0;
    double m1 = 0.0;
    std::string out_path;
};

int run_diagnose(const DiagnoseOpts& o) {
    if (!(o.window_hi > o.window_lo) || !(o.window_lo > 0.0))
        throw CliError(kExitInvalid, "need a valid --window lo hi");
    json report;

    if (!o.moments_path.empty()) {
        Csv csv = read_csv(o.moments_path);
        auto& t = csv.col("t");
        auto& m = csv.col("M");
        double slope, intercept, rms;
        long used;
        check(nld_loglog_slope(t.data(), m.data(), static_cast<long>(t.size()),
                               o.window_lo, o.window_hi, &slope, &intercept, &rms,
                               &used));
        report["slope_mass"] = slope;
        report["slope_mass_samples"] = used;
    }

    std::optional<Csv> mass_ode;
    if (!o.mass_ode_path.empty()) {
        mass_ode = read_csv(o.mass_ode_path);
        auto& t = mass_ode->col("t");
        auto& a = mass_ode->col("a");
        // Skip t = 0 where log a is undefined.
        std::vector<double> tp, ap;
        for (size_t i = 0; i < t.size(); ++i)
            if (t[i] > 0.0 && a[i] > 0.0) {
                tp.push_back(t[i]);
                ap.push_back(a[i]);
            }
        double slope, intercept, rms;
        long used;
        check(nld_loglog_slope(tp.data(), ap.data(), static_cast<long>(tp.size()),
                               o.window_lo, o.window_hi, &slope, &intercept, &rms,
                               &used));
        report["slope_a"] = slope;
    }

    if (!o.profiles.empty()) {
        if (!mass_ode)
            throw CliError(kExitInvalid, "profile collapse needs --mass-ode for a(t)");
        if (!(o.m1 > 0.0))
            throw CliError(kExitInvalid, "profile collapse needs --m1 > 0");
        std::vector<double> times, distances, errors;
        for (const std::string& spec : o.profiles) {
            size_t eq = spec.find('=');
            if (eq == std::string::npos)
                throw CliError(kExitInvalid, "--profile expects TIME=PATH, got " + spec);
            double t = 0.0;
            try {
                t = std::stod(spec.substr(0, eq));
            } catch (const std::exception&) {
                throw CliError(kExitInvalid, "bad time in --profile " + spec);
            }
            Csv csv = read_csv(spec.substr(eq + 1));
            auto& x = csv.col("x");
            auto& u = csv.col("u");
            double a = interp_column(mass_ode->col("t"), mass_ode->col("a"), t);
            double d, err;
            check(nld_collapse_distance(x.data(), u.data(), static_cast<long>(x.size()),
                                        a, o.m1, 10.0, 400, &d));
            check(nld_attractor_error(x.data(), u.data(), static_cast<long>(x.size()),
                                      a, o.m1, &err));
            times.push_back(t);
            distances.push_back(d);
            errors.push_back(err);
        }
        report["collapse_times"] = times;
        report["collapse_distances"] = distances;
        report["attractor_errors"] = errors;
        if (times.size() >= 2) {
            // Plain OLS over the supplied times (often fewer than 10 points).
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            double sy2 = 0, sxy2 = 0;
            for (size_t i = 0; i < times.size(); ++i) {
                double lx = std::log(times[i]), ly = std::log(distances[i]);
                double le = std::log(std::max(errors[i], 1e-300));
                sx += lx;
                sy += ly;
                sxx += lx * lx;
                sxy += lx * ly;
                sy2 += le;
                sxy2 += lx * le;
            }
            double n = static_cast<double>(times.size());
            double denom = n * sxx - sx * sx;
            report["collapse_exponent"] = (n * sxy - sx * sy) / denom;
            report["attractor_rate"] = (n * sxy2 - sx * sy2) / denom;
        }
    }

    double c_estimate;
    check(nld_phi_kernel_bound(10.0, 10.0, 0.01, &c_estimate));
    report["C_estimate"] = c_estimate;
    report["version"] = nld_version();

    std::string text = report.dump(2) + "\n";
    if (o.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(o.out_path);
        if (!out) throw CliError(kExitInvalid, "cannot write " + o.out_path);
        out << text;
    }
    return 0;
}

int run_profile(double mu, double xi_max, double step, const std::string& out_path) {
    if (!(step > 0.0) || !(xi_max > 0.0))
        throw CliError(kExitInvalid, "need positive --xi-max and --step");
    std::vector<double> xi;
    for (double v = 0.0; v <= xi_max + 1e-12; v += step) xi.push_back(v);
    std::vector<double> f(xi.size());
    check(nld_f_mu(mu, xi.data(), static_cast<long>(xi.size()), f.data()));
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw CliError(kExitInvalid, "cannot write " + out_path);
        out = &file;
    }
    *out << "xi,f_mu\n";
    for (size_t i = 0; i < xi.size(); ++i)
        *out << fmt(xi[i]) << ',' << fmt(f[i]) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for a nonlocal diffusion equation"};
    app.require_subcommand(1);

    SimulateOpts sim;
    std::string sim_config;
    auto* simulate = app.add_subcommand("simulate", "run a solver and emit CSV profiles");
    simulate->add_option("--solver", sim.solver, "fd | kernel | spectral");
    simulate->add_option("--ic", sim.ic, "initial condition JSON (inline or file path)");
    simulate->add_option("--L", sim.length, "domain length");
    simulate->add_option("--nx", sim.nodes, "node count");
    simulate->add_option("--t-end", sim.t_end, "final time");
    simulate->add_option("--outputs", sim.outputs, "output times")->delimiter(',');
    simulate->add_option("--theta", sim.theta, "stability safety factor (fd)");
    simulate->add_option("--dt", sim.dt, "explicit time step (fd, 0 = auto)");
    simulate->add_option("--modes", sim.modes, "mode count (spectral)");
    simulate->add_option("--rel-tol", sim.rel_tol, "ODE relative tolerance");
    simulate->add_option("--out-dir", sim.out_dir, "output directory");
    simulate->add_option("--label", sim.label, "run label");
    simulate->add_option("--config", sim_config, "JSON config; overrides flags");

    std::string mo_ic, mo_out = ".";
    double mo_t_end = 0.0, mo_rel_tol = 1e-8, mo_fit_lo = 0.0, mo_fit_hi = 0.0;
    auto* mass_ode = app.add_subcommand("mass-ode", "solve the time-rescaling ODE");
    mass_ode->add_option("--ic", mo_ic, "initial condition JSON (inline or file path)");
    mass_ode->add_option("--t-end", mo_t_end, "final time");
    mass_ode->add_option("--rel-tol", mo_rel_tol, "ODE relative tolerance");
    mass_ode->add_option("--fit-lo", mo_fit_lo, "fit window lower edge");
    mass_ode->add_option("--fit-hi", mo_fit_hi, "fit window upper edge");
    mass_ode->add_option("--out-dir", mo_out, "output directory");

    DiagnoseOpts diag;
    auto* diagnose = app.add_subcommand("diagnose", "fit asymptotics from CSV outputs");
    diagnose->add_option("--moments", diag.moments_path, "moments CSV (t,M,...)");
    diagnose->add_option("--mass-ode", diag.mass_ode_path, "mass-ode CSV (t,a,M)");
    diagnose->add_option("--profile", diag.profiles, "profile CSV as TIME=PATH");
    diagnose->add_option("--window", [&diag](const std::vector<std::string>& v) {
        diag.window_lo = std::stod(v.at(0));
        diag.window_hi = std::stod(v.at(1));
        return true;
    }, "fit window lo hi")->expected(2);
    diagnose->add_option("--m1", diag.m1, "conserved first moment");
    diagnose->add_option("--out", diag.out_path, "report path (default stdout)");

    double pr_mu = 1.0 / 3.0, pr_xi_max = 6.0, pr_step = 0.01;
    std::string pr_out;
    auto* profile = app.add_subcommand("profile", "tabulate the self-similar profile");
    profile->add_option("--mu", pr_mu, "similarity exponent in [0,1)");
    profile->add_option("--xi-max", pr_xi_max, "grid upper end");
    profile->add_option("--step", pr_step, "grid step");
    profile->add_option("--out", pr_out, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << json{{"error", e.what()}}.dump() << '\n';
        return kExitInvalid;
    }

    try {
        if (simulate->parsed()) {
            if (!sim_config.empty()) apply_config(sim_config, sim);
            return run_simulate(sim);
        }
        if (mass_ode->parsed())
            return run_mass_ode(mo_ic, mo_t_end, mo_rel_tol, mo_fit_lo, mo_fit_hi,
                                mo_out);
        if (diagnose->parsed()) return run_diagnose(diag);
        if (profile->parsed()) return run_profile(pr_mu, pr_xi_max, pr_step, pr_out);
    } catch (const CliError& e) {
        std::cerr << json{{"error", e.what()}}.dump() << '\n';
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << '\n';
        return kExitNumeric;
    }
    return kExitInvalid;
}

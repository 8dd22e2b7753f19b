#include "mass_ode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fit.hpp"
#include "quadrature.hpp"

namespace nld {

namespace {

constexpr double kCacheAmin = 1e-8;
constexpr int kKnotsPerDecade = 32;
// e^{-37} ~ 9e-17: beyond this the Gaussian factor is below roundoff.
constexpr double kGaussCutoff = 37.0;

}  // namespace

MassOde::MassOde(InitialCondition ic) : ic_(std::move(ic)) {
    if (std::holds_alternative<ScaledSine>(ic_.variant()))
        throw std::domain_error(
            "MassOde: ScaledSine is bounded-domain data; use the spectral solver");
    m0_ = ic_.mass0();
}

double MassOde::quadrature_G(double a) const {
    const double cut = std::sqrt(4.0 * a * kGaussCutoff);
    double lo = ic_.support_lo();
    double hi = std::min(ic_.support_hi(), cut);
    if (!(hi > lo)) return 0.0;

    auto integrand = [&](double s) {
        return s * std::exp(-s * s / (4.0 * a)) * ic_.evaluate(s);
    };

    // Near-origin structure (data varies on O(1) scales) resolved with fine
    // panels; the Gaussian tail with panels on the sqrt(a) scale.
    double split = std::clamp(8.0, lo, hi);
    double integral = 0.0;
    if (split > lo) integral += gl_composite(lo, split, 16, 16, integrand);
    if (hi > split) {
        int panels = static_cast<int>(std::ceil((hi - split) / std::sqrt(4.0 * a)));
        panels = std::clamp(panels, 2, 64);
        integral += gl_composite(split, hi, panels, 24, integrand);
    }
    return integral / (2.0 * std::sqrt(M_PI)) * std::pow(a, -1.5);
}

double MassOde::G(double a) const {
    if (!(a > 0.0)) throw std::domain_error("MassOde::G: a must be positive");
    if (const auto* ind = std::get_if<Indicator>(&ic_.variant())) {
        // Exact: int_lo^hi s e^{-s^2/4a} ds = 2a (e^{-lo^2/4a} - e^{-hi^2/4a}).
        return (std::exp(-ind->lo * ind->lo / (4.0 * a)) -
                std::exp(-ind->hi * ind->hi / (4.0 * a))) /
               std::sqrt(M_PI * a);
    }
    return quadrature_G(a);
}

void MassOde::extend_cache(double a_needed) const {
    const double ratio = std::pow(10.0, 1.0 / kKnotsPerDecade);
    if (log_a_.empty()) {
        double a0 = kCacheAmin;
        // F(a0) by the sigma = sqrt(a) substitution, removing the a^{-1/2}
        // singularity of G for data not vanishing at the origin.
        double f0 = gl_composite(0.0, std::sqrt(a0), 8, 16,
                                 [&](double s) { return 2.0 * s * G(s * s); });
        log_a_.push_back(std::log(a0));
        f_.push_back(f0);
        df_dlog_.push_back(a0 * G(a0));
    }
    double target = std::log(std::max(a_needed * ratio, 10.0));
    while (log_a_.back() < target) {
        double a_prev = std::exp(log_a_.back());
        double a_next = a_prev * ratio;
        double inc = GaussLegendre::rule(16).integrate(
            std::sqrt(a_prev), std::sqrt(a_next),
            [&](double s) { return 2.0 * s * G(s * s); });
        log_a_.push_back(std::log(a_next));
        f_.push_back(f_.back() + inc);
        df_dlog_.push_back(a_next * G(a_next));
    }
}

double MassOde::interp_F(double a) const {
    if (a <= kCacheAmin) {
        return gl_composite(0.0, std::sqrt(a), 8, 16,
                            [&](double s) { return 2.0 * s * G(s * s); });
    }
    if (log_a_.empty() || std::log(a) > log_a_.back()) extend_cache(a);
    double l = std::log(a);
    auto it = std::upper_bound(log_a_.begin(), log_a_.end(), l);
    if (it == log_a_.end()) return f_.back();
    size_t i = static_cast<size_t>(it - log_a_.begin());
    if (i == 0) return f_.front();
    --i;
    return hermite(log_a_[i], f_[i], df_dlog_[i], log_a_[i + 1], f_[i + 1],
                   df_dlog_[i + 1], l);
}

double MassOde::F(double a) const {
    if (a < 0.0) throw std::domain_error("MassOde::F: a must be nonnegative");
    if (a == 0.0) return 0.0;
    return interp_F(a);
}

TimeRescaling MassOde::solve(double t_end, const OdeControls& controls) const {
    if (!(t_end > 0.0)) throw std::invalid_argument("MassOde::solve: t_end must be positive");
    TimeRescaling out;
    out.m0 = m0_;
    if (m0_ <= 0.0) {
        out.degenerate = true;
        out.trajectory.t = {0.0, t_end};
        out.trajectory.y = {0.0, 0.0};
        out.trajectory.dy = {0.0, 0.0};
        return out;
    }
    auto rhs = [this](double, double a) {
        return std::max(0.0, m0_ - F(std::max(a, 0.0)));
    };
    out.trajectory = integrate_ode(rhs, 0.0, t_end, controls);
    return out;
}

AsymptoticConstants MassOde::asymptotic_constants() const {
    AnalyticMoments am = ic_.analytic_moments();
    if (am.m1_unbounded || !am.m1)
        throw std::domain_error("asymptotic_constants: first moment not finite");
    AsymptoticConstants out;
    out.c = std::pow(3.0 * (*am.m1) / (2.0 * std::sqrt(M_PI)), 2.0 / 3.0);
    return out;
}

double MassOde::tail_exponent(const TimeRescaling& resc, double t_lo, double t_hi,
                              int samples) {
    if (resc.degenerate) throw std::domain_error("tail_exponent: degenerate rescaling");
    if (!(t_lo > 0.0) || !(t_hi >= 10.0 * t_lo))
        throw std::domain_error("tail_exponent: window must span at least one decade");
    if (t_hi > resc.t_end() * (1.0 + 1e-12))
        throw std::domain_error("tail_exponent: window beyond sampled times");
    std::vector<double> lt(samples), la(samples);
    double r = std::log(t_hi / t_lo) / (samples - 1);
    for (int i = 0; i < samples; ++i) {
        double t = t_lo * std::exp(i * r);
        lt[i] = std::log(t);
        la[i] = std::log(resc.a_at(t));
    }
    return fit_line(lt, la).slope;
}

}  // namespace nld

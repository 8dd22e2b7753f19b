#pragma once

#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace nld {

// Relative tolerance used when asserting nonnegativity of computed fields.
inline constexpr double kNegativityTolRel = 1e-12;

struct MomentRecord {
    double t = 0.0;
    double mass = 0.0;
    double m1 = 0.0;
    double m2 = 0.0;
    double sup_norm = 0.0;
};

// Closed-form moments of a built-in initial condition. A divergent first
// moment (heavy-tail data) is flagged rather than reported as a number.
struct AnalyticMoments {
    double mass = 0.0;
    std::optional<double> m1;
    std::optional<double> m2;
    bool m1_unbounded = false;
};

struct Indicator {
    double lo = 0.0;
    double hi = 0.0;

    bool operator==(const Indicator&) const = default;
};

// (M/2) sin x on (0, pi), zero elsewhere; mass M.
struct ScaledSine {
    double mass = 0.0;

    bool operator==(const ScaledSine&) const = default;
};

// x (1+x)^{-delta-1}: linear at the origin, tail O(x^{-delta}), 1 < delta < 2.
struct PowerTail {
    double delta = 0.0;

    bool operator==(const PowerTail&) const = default;
};

// The large-time attractor shape at unit bandwidth: m1 x/(2 sqrt(pi)) e^{-x^2/4}.
struct SelfSimilarSeed {
    double m1 = 0.0;

    bool operator==(const SelfSimilarSeed&) const = default;
};

// Piecewise-linear samples; zero outside the sampled range.
struct Tabulated {
    std::vector<double> x;
    std::vector<double> u;

    bool operator==(const Tabulated&) const = default;
};

class InitialCondition {
public:
    using Variant = std::variant<Indicator, ScaledSine, PowerTail, SelfSimilarSeed, Tabulated>;

    explicit InitialCondition(Variant v);

    const Variant& variant() const { return variant_; }
    std::string variant_name() const;

    double evaluate(double x) const;

    // Support interval [lo, hi]; hi is +inf for heavy-tail data.
    double support_lo() const;
    double support_hi() const;

    double mass0() const;
    AnalyticMoments analytic_moments() const;
    bool has_analytic_moments() const;

    std::string to_json() const;
    static InitialCondition from_json(const std::string& text);

    bool operator==(const InitialCondition&) const = default;

private:
    Variant variant_;
};

}  // namespace nld

#include "initial_condition.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace nld {

namespace {

void validate(const InitialCondition::Variant& v) {
    std::visit(
        [](const auto& ic) {
            using T = std::decay_t<decltype(ic)>;
            if constexpr (std::is_same_v<T, Indicator>) {
                if (!(ic.lo >= 0.0) || !(ic.hi > ic.lo))
                    throw std::invalid_argument("Indicator: requires 0 <= lo < hi");
            } else if constexpr (std::is_same_v<T, ScaledSine>) {
                if (!(ic.mass > 0.0))
                    throw std::invalid_argument("ScaledSine: mass must be positive");
            } else if constexpr (std::is_same_v<T, PowerTail>) {
                if (!(ic.delta > 1.0) || !(ic.delta < 2.0))
                    throw std::invalid_argument("PowerTail: delta must lie in (1, 2)");
            } else if constexpr (std::is_same_v<T, SelfSimilarSeed>) {
                if (!(ic.m1 > 0.0))
                    throw std::invalid_argument("SelfSimilarSeed: m1 must be positive");
            } else if constexpr (std::is_same_v<T, Tabulated>) {
                if (ic.x.size() != ic.u.size() || ic.x.size() < 2)
                    throw std::invalid_argument("Tabulated: need matching x/u samples");
                if (!(ic.x.front() >= 0.0))
                    throw std::invalid_argument("Tabulated: samples must start at x >= 0");
                for (size_t i = 1; i < ic.x.size(); ++i)
                    if (!(ic.x[i] > ic.x[i - 1]))
                        throw std::invalid_argument("Tabulated: x samples not increasing");
                for (double v : ic.u)
                    if (v < 0.0)
                        throw std::invalid_argument("Tabulated: negative values rejected");
            }
        },
        v);
}

}  // namespace

InitialCondition::InitialCondition(Variant v) : variant_(std::move(v)) {
    validate(variant_);
}

std::string InitialCondition::variant_name() const {
    return std::visit(
        [](const auto& ic) -> std::string {
            using T = std::decay_t<decltype(ic)>;
            if constexpr (std::is_same_v<T, Indicator>) return "indicator";
            else if constexpr (std::is_same_v<T, ScaledSine>) return "scaled_sine";
            else if constexpr (std::is_same_v<T, PowerTail>) return "power_tail";
            else if constexpr (std::is_same_v<T, SelfSimilarSeed>) return "self_similar_seed";
            else return "tabulated";
        },
        variant_);
}

double InitialCondition::evaluate(double x) const {
    if (x < 0.0) return 0.0;
    return std::visit(
        [x](const auto& ic) -> double {
            using T = std::decay_t<decltype(ic)>;
            if constexpr (std::is_same_v<T, Indicator>) {
                return (x >= ic.lo && x <= ic.hi) ? 1.0 : 0.0;
            } else if constexpr (std::is_same_v<T, ScaledSine>) {
                return (x < M_PI) ? 0.5 * ic.mass * std::sin(x) : 0.0;
            } else if constexpr (std::is_same_v<T, PowerTail>) {
                return x * std::pow(1.0 + x, -ic.delta - 1.0);
            } else if constexpr (std::is_same_v<T, SelfSimilarSeed>) {
                return ic.m1 * x / (2.0 * std::sqrt(M_PI)) * std::exp(-0.25 * x * x);
            } else {
                const Tabulated& tab = ic;
                if (x < tab.x.front() || x > tab.x.back()) return 0.0;
                auto it = std::upper_bound(tab.x.begin(), tab.x.end(), x);
                if (it == tab.x.begin()) return tab.u.front();
                if (it == tab.x.end()) return tab.u.back();
                size_t i = static_cast<size_t>(it - tab.x.begin()) - 1;
                double s = (x - tab.x[i]) / (tab.x[i + 1] - tab.x[i]);
                return (1.0 - s) * tab.u[i] + s * tab.u[i + 1];
            }
        },
        variant_);
}

double InitialCondition::support_lo() const {
    return std::visit(
        [](const auto& ic) -> double {
            using T = std::decay_t<decltype(ic)>;
            if constexpr (std::is_same_v<T, Indicator>) return ic.lo;
            else if constexpr (std::is_same_v<T, Tabulated>) return ic.x.front();
            else return 0.0;
        },
        variant_);
}

double InitialCondition::support_hi() const {
    return std::visit(
        [](const auto& ic) -> double {
            using T = std::decay_t<decltype(ic)>;
            if constexpr (std::is_same_v<T, Indicator>) return ic.hi;
            else if constexpr (std::is_same_v<T, ScaledSine>) return M_PI;
            else if constexpr (std::is_same_v<T, Tabulated>) return ic.x.back();
            else return std::numeric_limits<double>::infinity();
        },
        variant_);
}

double InitialCondition::mass0() const {
    return std::visit(
        [](const auto& ic) -> double {
            using T = std::decay_t<decltype(ic)>;
            if constexpr (std::is_same_v<T, Indicator>) {
                return ic.hi - ic.lo;
            } else if constexpr (std::is_same_v<T, ScaledSine>) {
                return ic.mass;
            } else if constexpr (std::is_same_v<T, PowerTail>) {
                return 1.0 / (ic.delta * (ic.delta - 1.0));
            } else if constexpr (std::is_same_v<T, SelfSimilarSeed>) {
                return ic.m1 / std::sqrt(M_PI);
            } else {
                const Tabulated& tab = ic;
                double sum = 0.0;
                for (size_t i = 0; i + 1 < tab.x.size(); ++i)
                    sum += 0.5 * (tab.u[i] + tab.u[i + 1]) * (tab.x[i + 1] - tab.x[i]);
                return sum;
            }
        },
        variant_);
}

bool InitialCondition::has_analytic_moments() const {
    return !std::holds_alternative<Tabulated>(variant_);
}

AnalyticMoments InitialCondition::analytic_moments() const {
    if (!has_analytic_moments())
        throw std::domain_error("analytic_moments: not available for tabulated data");
    AnalyticMoments out;
    out.mass = mass0();
    std::visit(
        [&out](const auto& ic) {
            using T = std::decay_t<decltype(ic)>;
            if constexpr (std::is_same_v<T, Indicator>) {
                out.m1 = 0.5 * (ic.hi * ic.hi - ic.lo * ic.lo);
                out.m2 = (ic.hi * ic.hi * ic.hi - ic.lo * ic.lo * ic.lo) / 3.0;
            } else if constexpr (std::is_same_v<T, ScaledSine>) {
                out.m1 = 0.5 * ic.mass * M_PI;
                out.m2 = 0.5 * ic.mass * (M_PI * M_PI - 4.0);
            } else if constexpr (std::is_same_v<T, PowerTail>) {
                out.m1_unbounded = true;
            } else if constexpr (std::is_same_v<T, SelfSimilarSeed>) {
                out.m1 = ic.m1;
                out.m2 = 4.0 * ic.m1 / std::sqrt(M_PI);
            }
        },
        variant_);
    return out;
}

std::string InitialCondition::to_json() const {
    nlohmann::json params;
    std::visit(
        [&params](const auto& ic) {
            using T = std::decay_t<decltype(ic)>;
            if constexpr (std::is_same_v<T, Indicator>) {
                params["a"] = ic.lo;
                params["b"] = ic.hi;
            } else if constexpr (std::is_same_v<T, ScaledSine>) {
                params["mass"] = ic.mass;
            } else if constexpr (std::is_same_v<T, PowerTail>) {
                params["delta"] = ic.delta;
            } else if constexpr (std::is_same_v<T, SelfSimilarSeed>) {
                params["m1"] = ic.m1;
            } else {
                params["x"] = ic.x;
                params["u"] = ic.u;
            }
        },
        variant_);
    nlohmann::json j = {{"variant", variant_name()}, {"params", params}};
    return j.dump();
}

InitialCondition InitialCondition::from_json(const std::string& text) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    std::string variant = j.at("variant").get<std::string>();
    if (variant != "indicator" && variant != "scaled_sine" && variant != "power_tail" &&
        variant != "self_similar_seed" && variant != "tabulated")
        throw std::invalid_argument("InitialCondition: unknown variant '" + variant + "'");
    const nlohmann::json& p = j.at("params");
    if (variant == "indicator")
        return InitialCondition(Indicator{p.at("a").get<double>(), p.at("b").get<double>()});
    if (variant == "scaled_sine")
        return InitialCondition(ScaledSine{p.at("mass").get<double>()});
    if (variant == "power_tail")
        return InitialCondition(PowerTail{p.at("delta").get<double>()});
    if (variant == "self_similar_seed")
        return InitialCondition(SelfSimilarSeed{p.at("m1").get<double>()});
    if (variant == "tabulated")
        return InitialCondition(Tabulated{p.at("x").get<std::vector<double>>(),
                                          p.at("u").get<std::vector<double>>()});
    throw std::invalid_argument("InitialCondition: unknown variant '" + variant + "'");
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("InitialCondition: malformed JSON: ") +
                                e.what());
  }
}

}  // namespace nld

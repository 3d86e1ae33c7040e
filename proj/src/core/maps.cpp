#include "ddmap/maps.hpp"

#include <algorithm>
#include <string>

namespace ddmap {
namespace {

std::string fraction_id(const std::string& base, const KickParams& p) {
    return base + "(C*K=" + std::to_string(p.C() * p.K()) + ")";
}

}  // namespace

ScalarMap cycle_map(const GainLossSystem& system) {
    ScalarMap map;
    map.nonnegative = system.nonnegative;
    map.id = system.id + "/cycle";
    const auto gain = system.gain;
    const auto loss = system.loss;
    const bool clamp = system.nonnegative;
    auto c = [clamp](double x) { return clamp ? std::max(x, 0.0) : x; };
    if (system.state == CycleState::post_loss) {
        map.f = [gain, loss, c](double x) { return c(loss(c(gain(x)))); };
    } else {
        map.f = [gain, loss, c](double x) { return c(gain(c(loss(x)))); };
    }
    return map;
}

ScalarMap kick_velocity_map(const KickParams& p) {
    return ScalarMap{
        [p](double v) { return kick_velocity_step(v, p); },
        [p](double v) { return kick_velocity_derivative(v, p); },
        false,
        fraction_id("kick-velocity", p),
    };
}

ScalarMap kick_energy_map(const KickParams& p, EnergyVariant variant) {
    return ScalarMap{
        [p, variant](double E) { return energy_cycle(E, p, variant); },
        [p, variant](double E) { return energy_cycle_derivative(E, p, variant); },
        true,
        fraction_id(std::string("kick-energy/") + to_string(variant), p),
    };
}

ScalarMap logistic_map(const LogisticParams& p) {
    return ScalarMap{
        [p](double E) { return logistic_step(E, p); },
        [p](double E) { return logistic_derivative(E, p); },
        false,
        "logistic(r=" + std::to_string(p.r()) + ")",
    };
}

ScalarMap two_step_logistic_map(const LogisticParams& p) {
    ScalarMap map = cycle_map(logistic_system(p));
    // T(G(E)) = rE - rE^2 on [0, 1], so the slope is the logistic one.
    map.df = [p](double E) { return logistic_derivative(E, p); };
    return map;
}

GainLossSystem kick_system(const KickParams& p, EnergyVariant variant) {
    return GainLossSystem{
        [p, variant](double E) { return kick_gain_curve(E, p, variant); },
        [p](double E) { return kick_loss_curve(E, p); },
        Interval{0.0, 50.0},
        CycleState::post_gain,
        true,
        fraction_id(std::string("kick-two-step/") + to_string(variant), p),
    };
}

GainLossSystem logistic_system(const LogisticParams& p) {
    return GainLossSystem{
        [p](double E) { return logistic_gain(E, p); },
        [p](double E) { return logistic_loss(E, p); },
        Interval{0.0, 1.0},
        CycleState::post_loss,
        true,
        "two-step-logistic(r=" + std::to_string(p.r()) + ")",
    };
}

MapFamily kick_energy_family(EnergyVariant variant) {
    return MapFamily{
        [variant](double c_times_K) {
            return kick_energy_map(KickParams::paper_defaults_fraction(c_times_K), variant);
        },
        std::string("kick-energy/") + to_string(variant),
    };
}

MapFamily kick_velocity_family() {
    return MapFamily{
        [](double c_times_K) {
            return kick_velocity_map(KickParams::paper_defaults_fraction(c_times_K));
        },
        "kick-velocity",
    };
}

MapFamily logistic_family() {
    return MapFamily{[](double r) { return logistic_map(LogisticParams(r)); }, "logistic"};
}

MapFamily two_step_logistic_family() {
    return MapFamily{[](double r) { return two_step_logistic_map(LogisticParams(r)); },
                     "two-step-logistic"};
}

}  // namespace ddmap

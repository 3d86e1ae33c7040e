#pragma once

#include <functional>
#include <string>

#include "ddmap/kick.hpp"
#include "ddmap/logistic.hpp"

namespace ddmap {

/// Closed interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const noexcept { return hi - lo; }
    bool contains(double x) const noexcept { return x >= lo && x <= hi; }
};

/// A scalar endomorphism together with its slope.
///
/// Energy-domain maps set `nonnegative`; the orbit layer then clamps every
/// iterate to max(x, 0). The curve evaluators themselves never clamp.
struct ScalarMap {
    std::function<double(double)> f;
    std::function<double(double)> df;  // may be empty
    bool nonnegative = false;
    std::string id;

    double operator()(double x) const { return f(x); }
    bool has_derivative() const noexcept { return static_cast<bool>(df); }
};

/// One-parameter family of maps, e.g. the kick energy cycle indexed by C K.
struct MapFamily {
    std::function<ScalarMap(double)> at;
    std::string id;
};

/// Which composition of the two curves forms one cycle.
///
/// post_loss: the state is the post-loss energy and one cycle is T(G(E))
/// (the two-step logistic map). post_gain: the state is the post-gain energy
/// and one cycle is G(T(E)) (the kick energy cycle).
enum class CycleState { post_loss, post_gain };

/// A damped-driven system written as separate gain and loss curves.
struct GainLossSystem {
    std::function<double(double)> gain;
    std::function<double(double)> loss;
    Interval domain;
    CycleState state = CycleState::post_loss;
    bool nonnegative = true;
    std::string id;
};

/// The composed cycle map of a two-step system. When the system is
/// nonnegative each curve output is clamped to max(., 0), exactly as the
/// cobweb trace does, so the two stay bit-identical.
ScalarMap cycle_map(const GainLossSystem& system);

ScalarMap kick_velocity_map(const KickParams& p);
ScalarMap kick_energy_map(const KickParams& p, EnergyVariant variant = EnergyVariant::exact_square);
ScalarMap logistic_map(const LogisticParams& p);
ScalarMap two_step_logistic_map(const LogisticParams& p);

GainLossSystem kick_system(const KickParams& p, EnergyVariant variant = EnergyVariant::exact_square);
GainLossSystem logistic_system(const LogisticParams& p);

// Kick families take C as a multiple of 1/K: at(0.25) is C = 1/(4K).
MapFamily kick_energy_family(EnergyVariant variant = EnergyVariant::exact_square);
MapFamily kick_velocity_family();
MapFamily logistic_family();
MapFamily two_step_logistic_family();

}  // namespace ddmap

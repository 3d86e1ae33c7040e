#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

#include "ddmap/kick.hpp"

namespace ddmap {

/// A walker on an annulus of circumference L, sampled once per impact.
struct WalkerPath {
    std::vector<double> positions;   // wrapped to [0, L)
    std::vector<double> velocities;  // signed
    std::vector<double> unwrapped;   // cumulative arc length
    double circumference = 0.0;
    double dt = 1.0;

    std::size_t size() const noexcept { return velocities.size(); }
};

inline constexpr double kDefaultCircumference = 10.0 * std::numbers::pi;

/// Iterates the signed velocity map from v0 for `impacts` impacts and advances
/// the position by v_{n+1} dt per impact, starting at arc length 0.
WalkerPath simulate_walk(const KickParams& p, double v0, std::size_t impacts,
                         double circumference = kDefaultCircumference, double dt = 1.0);

struct Histogram {
    double bin_width = 0.0;
    std::vector<std::size_t> counts;  // bin i covers [i w, (i+1) w)

    std::size_t occupied_bins() const;
};

struct PathStats {
    double mean_speed = 0.0;
    std::size_t direction_switch_count = 0;
    Histogram displacement;  // of |x_{n+1} - x_n|
};

/// Statistics over impacts [skip, size). Zero velocities are ignored when
/// counting direction switches.
PathStats path_stats(const WalkerPath& path, double bin_width, std::size_t skip = 0);

enum class WalkRegime { steady, two_step, periodic, chaotic, aperiodic };
const char* to_string(WalkRegime regime) noexcept;

struct WalkClassification {
    WalkRegime regime = WalkRegime::aperiodic;
    int period = 0;
    double lyapunov = 0.0;
};

/// Labels the regime from the period and Lyapunov exponent of the velocity
/// orbit.
WalkClassification classify_walk(const KickParams& p, double v0, std::size_t transient = 5000,
                                 std::size_t keep = 256, std::size_t lyapunov_n = 100000);

}  // namespace ddmap

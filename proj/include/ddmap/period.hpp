#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "ddmap/fixed_points.hpp"
#include "ddmap/maps.hpp"
#include "ddmap/orbit.hpp"

namespace ddmap {

inline constexpr int kDefaultMaxPeriod = 64;
inline constexpr double kDefaultPeriodTol = 1e-6;

/// Smallest p in [1, p_max] with |x_{k+p} - x_k| <= tol max(1, |x_k|) over
/// the whole window, or 0 when none fits. Throws WindowTooShortError when the
/// window holds fewer than 3 p_max samples.
int detect_period(std::span<const double> window, int p_max = kDefaultMaxPeriod,
                  double tol = kDefaultPeriodTol);
int detect_period(const Orbit& orbit, int p_max = kDefaultMaxPeriod,
                  double tol = kDefaultPeriodTol);

struct ThreeCycle {
    /// Orbit order, starting from the smallest point.
    std::array<double, 3> points{};
    /// Product of the slopes along the cycle (NaN when the map has no slope).
    double multiplier = 0.0;
    Stability stability = Stability::nonhyperbolic;
};

struct ThreeCycleOptions {
    RootScanOptions scan{1e-12, 1e-9, 1e-10, false};
    /// Relative tolerance used to decide that two roots sit on the same cycle
    /// and that a root is really a fixed point.
    double match_tol = 1e-7;
};

/// Period-3 orbits of `map` with a point in `domain`: roots of f^3(x) - x
/// with the fixed points removed, grouped by forward iteration.
std::vector<ThreeCycle> find_three_cycle(const ScalarMap& map, Interval domain,
                                         std::size_t grid_n,
                                         const ThreeCycleOptions& options = {});

}  // namespace ddmap

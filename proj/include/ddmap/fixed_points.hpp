#pragma once

#include <cstddef>
#include <vector>

#include "ddmap/maps.hpp"
#include "ddmap/roots.hpp"

namespace ddmap {

enum class Stability { sink, source, nonhyperbolic };

const char* to_string(Stability stability) noexcept;

/// |multiplier| compared against 1 with a nonhyperbolic band of +-band.
Stability classify_multiplier(double multiplier, double band = 1e-9);

struct FixedPoint {
    double value = 0.0;
    Stability stability = Stability::nonhyperbolic;
    double multiplier = 0.0;
    bool tangential = false;
};

struct FixedPointSet {
    std::vector<FixedPoint> points;  // ascending

    /// Points farther than `trivial_tol` from the origin.
    std::size_t nontrivial_count(double trivial_tol = 1e-9) const;
};

struct FixedPointOptions {
    RootScanOptions scan;
    double nonhyperbolic_band = 1e-9;
};

/// Fixed points of `cycle` on `domain` (roots of cycle(E) - E).
///
/// When `derivative` is empty the multiplier is taken from a central
/// difference. Throws DomainError for an empty or non-finite domain or
/// grid_n < 2.
FixedPointSet fixed_points(const ScalarFn& cycle, const ScalarFn& derivative, Interval domain,
                           std::size_t grid_n, const FixedPointOptions& options = {});

FixedPointSet fixed_points(const ScalarMap& map, Interval domain, std::size_t grid_n,
                           const FixedPointOptions& options = {});

/// Central-difference slope, shrinking the stencil to stay inside `domain`.
double numeric_slope(const ScalarFn& f, double x, Interval domain);

}  // namespace ddmap

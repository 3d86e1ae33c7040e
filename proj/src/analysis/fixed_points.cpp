#include "ddmap/fixed_points.hpp"

#include <algorithm>
#include <cmath>

#include "ddmap/error.hpp"

namespace ddmap {

const char* to_string(Stability stability) noexcept {
    switch (stability) {
        case Stability::sink:
            return "sink";
        case Stability::source:
            return "source";
        case Stability::nonhyperbolic:
            return "nonhyperbolic";
    }
    return "unknown";
}

Stability classify_multiplier(double multiplier, double band) {
    const double m = std::abs(multiplier);
    if (std::abs(m - 1.0) <= band) {
        return Stability::nonhyperbolic;
    }
    return m < 1.0 ? Stability::sink : Stability::source;
}

std::size_t FixedPointSet::nontrivial_count(double trivial_tol) const {
    return static_cast<std::size_t>(std::count_if(
        points.begin(), points.end(),
        [trivial_tol](const FixedPoint& p) { return std::abs(p.value) > trivial_tol; }));
}

double numeric_slope(const ScalarFn& f, double x, Interval domain) {
    double h = 1e-6 * std::max(1.0, std::abs(x));
    const double lo = std::max(domain.lo, x - h);
    const double hi = std::min(domain.hi, x + h);
    if (hi <= lo) {
        return 0.0;
    }
    return (f(hi) - f(lo)) / (hi - lo);
}

FixedPointSet fixed_points(const ScalarFn& cycle, const ScalarFn& derivative, Interval domain,
                           std::size_t grid_n, const FixedPointOptions& options) {
    if (!std::isfinite(domain.lo) || !std::isfinite(domain.hi) || !(domain.hi > domain.lo)) {
        throw DomainError("fixed_points: domain must be a finite, nonempty interval");
    }
    if (grid_n < 2) {
        throw DomainError("fixed_points: grid_n must be at least 2");
    }
    const ScalarFn residual = [&cycle](double x) { return cycle(x) - x; };

    FixedPointSet set;
    for (const Root& root : scan_roots(residual, domain, grid_n, options.scan)) {
        FixedPoint point;
        point.value = root.x;
        point.tangential = root.tangential;
        point.multiplier =
            derivative ? derivative(root.x) : numeric_slope(cycle, root.x, domain);
        point.stability = root.tangential
                              ? Stability::nonhyperbolic
                              : classify_multiplier(point.multiplier, options.nonhyperbolic_band);
        set.points.push_back(point);
    }
    return set;
}

FixedPointSet fixed_points(const ScalarMap& map, Interval domain, std::size_t grid_n,
                           const FixedPointOptions& options) {
    return fixed_points(map.f, map.df, domain, grid_n, options);
}

}  // namespace ddmap

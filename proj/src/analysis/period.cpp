#include "ddmap/period.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ddmap/error.hpp"

namespace ddmap {

int detect_period(std::span<const double> window, int p_max, double tol) {
    if (p_max < 1) {
        throw DomainError("detect_period: p_max must be at least 1");
    }
    const auto needed = 3 * static_cast<std::size_t>(p_max);
    if (window.size() < needed) {
        throw WindowTooShortError("detect_period: window of " + std::to_string(window.size()) +
                                  " samples is shorter than 3*p_max = " + std::to_string(needed));
    }
    for (int p = 1; p <= p_max; ++p) {
        const auto step = static_cast<std::size_t>(p);
        bool matches = true;
        for (std::size_t k = 0; k + step < window.size(); ++k) {
            if (std::abs(window[k + step] - window[k]) > tol * std::max(1.0, std::abs(window[k]))) {
                matches = false;
                break;
            }
        }
        if (matches) {
            return p;
        }
    }
    return 0;
}

int detect_period(const Orbit& orbit, int p_max, double tol) {
    return detect_period(std::span<const double>(orbit.samples), p_max, tol);
}

std::vector<ThreeCycle> find_three_cycle(const ScalarMap& map, Interval domain,
                                         std::size_t grid_n, const ThreeCycleOptions& options) {
    const bool clamp = map.nonnegative;
    const ScalarFn f = [&map, clamp](double x) {
        const double y = map.f(x);
        return clamp ? std::max(y, 0.0) : y;
    };
    const ScalarFn residual = [&f](double x) { return f(f(f(x))) - x; };
    auto close = [&options](double a, double b) {
        return std::abs(a - b) <= options.match_tol * std::max(1.0, std::abs(a));
    };

    std::vector<ThreeCycle> cycles;
    for (const Root& root : scan_roots(residual, domain, grid_n, options.scan)) {
        const double x = root.x;
        const double fx = f(x);
        if (close(x, fx)) {
            continue;
        }
        std::array<double, 3> pts{x, fx, f(fx)};
        const auto first = std::min_element(pts.begin(), pts.end());
        std::rotate(pts.begin(), first, pts.end());
        const bool seen = std::any_of(cycles.begin(), cycles.end(), [&](const ThreeCycle& c) {
            return close(c.points[0], pts[0]);
        });
        if (seen) {
            continue;
        }
        ThreeCycle cycle;
        cycle.points = pts;
        if (map.has_derivative()) {
            cycle.multiplier = map.df(pts[0]) * map.df(pts[1]) * map.df(pts[2]);
            cycle.stability = classify_multiplier(cycle.multiplier);
        } else {
            cycle.multiplier = std::numeric_limits<double>::quiet_NaN();
        }
        cycles.push_back(cycle);
    }
    std::sort(cycles.begin(), cycles.end(), [](const ThreeCycle& a, const ThreeCycle& b) {
        return a.points[0] < b.points[0];
    });
    return cycles;
}

}  // namespace ddmap

#include "ddmap/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ddmap/error.hpp"

namespace ddmap {
namespace {

bool opposite_signs(double a, double b) {
    return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0);
}

// Golden-section minimisation of |g| on [a, b].
double minimise_abs(const ScalarFn& g, double a, double b, double abs_tol) {
    const double inv_phi = 1.0 / std::numbers::phi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = std::abs(g(c));
    double fd = std::abs(g(d));
    for (int iter = 0; iter < 200 && (b - a) > abs_tol; ++iter) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = std::abs(g(c));
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = std::abs(g(d));
        }
    }
    return fc < fd ? c : d;
}

}  // namespace

std::vector<double> uniform_grid(Interval domain, std::size_t grid_n) {
    if (grid_n < 2) {
        throw DomainError("uniform_grid: need at least 2 points");
    }
    std::vector<double> grid(grid_n);
    const double step = domain.width() / static_cast<double>(grid_n - 1);
    for (std::size_t i = 0; i + 1 < grid_n; ++i) {
        grid[i] = domain.lo + step * static_cast<double>(i);
    }
    grid.back() = domain.hi;
    return grid;
}

std::vector<double> sample_residuals(const ScalarFn& g, const std::vector<double>& grid) {
    std::vector<double> out(grid.size());
    const auto n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[i] = g(grid[i]);
    }
    return out;
}

std::vector<double> sample_residuals_serial(const ScalarFn& g, const std::vector<double>& grid) {
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out[i] = g(grid[i]);
    }
    return out;
}

double bisect(const ScalarFn& g, double a, double b, double ga, double gb, double abs_tol) {
    for (int iter = 0; iter < 400 && (b - a) > abs_tol; ++iter) {
        const double m = a + 0.5 * (b - a);
        if (m <= a || m >= b) {
            break;
        }
        const double gm = g(m);
        if (gm == 0.0) {
            return m;
        }
        if (opposite_signs(ga, gm)) {
            b = m;
            gb = gm;
        } else {
            a = m;
            ga = gm;
        }
    }
    return std::abs(ga) <= std::abs(gb) ? a : b;
}

std::vector<Root> scan_roots(const ScalarFn& g, Interval domain, std::size_t grid_n,
                             const RootScanOptions& options) {
    if (!std::isfinite(domain.lo) || !std::isfinite(domain.hi) || !(domain.hi > domain.lo)) {
        throw DomainError("scan_roots: domain must be a finite, nonempty interval");
    }
    const std::vector<double> grid = uniform_grid(domain, grid_n);
    const std::vector<double> r = sample_residuals(g, grid);

    std::vector<Root> found;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (r[i] == 0.0) {
            found.push_back({grid[i], false});
        }
        if (i + 1 < grid.size() && opposite_signs(r[i], r[i + 1])) {
            found.push_back({bisect(g, grid[i], grid[i + 1], r[i], r[i + 1], options.abs_tol), false});
        }
    }

    if (options.detect_tangencies) {
        for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
            const double here = std::abs(r[i]);
            if (r[i] == 0.0 || here > std::abs(r[i - 1]) || here > std::abs(r[i + 1])) {
                continue;
            }
            if (opposite_signs(r[i - 1], r[i]) || opposite_signs(r[i], r[i + 1]) ||
                r[i - 1] == 0.0 || r[i + 1] == 0.0) {
                continue;
            }
            const double x = minimise_abs(g, grid[i - 1], grid[i + 1], options.abs_tol);
            const double gx = g(x);
            if (std::abs(gx) < options.tangency_tol) {
                found.push_back({x, true});
            }
        }
    }

    std::sort(found.begin(), found.end(),
              [](const Root& a, const Root& b) { return a.x < b.x; });
    std::vector<Root> merged;
    for (const Root& root : found) {
        if (!merged.empty() && root.x - merged.back().x <= options.merge_tol) {
            if (std::abs(g(root.x)) < std::abs(g(merged.back().x))) {
                merged.back() = root;
            }
            continue;
        }
        merged.push_back(root);
    }
    return merged;
}

}  // namespace ddmap

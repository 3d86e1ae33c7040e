#pragma once

// Grid-based root location for scalar residual functions g(x) = f(x) - x and
// friends. Residual sampling is the hot loop; it has an OpenMP kernel and a
// serial reference that must agree bit for bit.

#include <cstddef>
#include <functional>
#include <vector>

#include "ddmap/maps.hpp"

namespace ddmap {

using ScalarFn = std::function<double(double)>;

/// grid_n equally spaced points on [lo, hi]; the last point is exactly hi.
std::vector<double> uniform_grid(Interval domain, std::size_t grid_n);

/// g evaluated on `grid`, in parallel. g must be safe to call concurrently.
std::vector<double> sample_residuals(const ScalarFn& g, const std::vector<double>& grid);
std::vector<double> sample_residuals_serial(const ScalarFn& g, const std::vector<double>& grid);

/// Bisection on a bracket with g(a) g(b) < 0 until b - a <= abs_tol.
/// Returns whichever final endpoint has the smaller |g|.
double bisect(const ScalarFn& g, double a, double b, double ga, double gb, double abs_tol);

struct RootScanOptions {
    double abs_tol = 1e-12;
    double merge_tol = 1e-9;
    /// Local minima of |g| with no sign change are refined and kept when the
    /// refined |g| falls below this value.
    double tangency_tol = 1e-10;
    bool detect_tangencies = true;
};

struct Root {
    double x = 0.0;
    bool tangential = false;
};

/// Roots of g on `domain`: exact zeros at grid points, sign changes refined by
/// bisection, and (optionally) even-order touches found as near-zero local
/// minima of |g|. Sorted ascending, merged within merge_tol.
std::vector<Root> scan_roots(const ScalarFn& g, Interval domain, std::size_t grid_n,
                             const RootScanOptions& options = {});

}  // namespace ddmap

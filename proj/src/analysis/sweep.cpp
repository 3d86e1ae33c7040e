#include "ddmap/sweep.hpp"

#include <omp.h>

#include <cmath>
#include <limits>

#include "ddmap/error.hpp"
#include "ddmap/orbit.hpp"
#include "ddmap/period.hpp"

namespace ddmap {
namespace {

void validate(Interval range, std::size_t grid_n, const SweepOptions& o) {
    if (grid_n < 2) {
        throw DomainError("bifurcation_sweep: grid_n must be at least 2");
    }
    if (!std::isfinite(range.lo) || !std::isfinite(range.hi) || !(range.hi > range.lo)) {
        throw DomainError("bifurcation_sweep: parameter range must be finite and ascending");
    }
    if (o.p_max < 1 || o.keep < 3 * static_cast<std::size_t>(o.p_max)) {
        throw DomainError("bifurcation_sweep: keep must be at least 3*p_max");
    }
}

// Runs one grid point into `row`; returns the detected period.
int sweep_point(const ScalarMap& map, double seed, const SweepOptions& o, std::span<double> row) {
    try {
        double x = advance(map, seed, o.transient, 1);
        for (std::size_t j = 0; j < row.size(); ++j) {
            x = orbit_step(map, x, o.transient + 1 + j);
            row[j] = x;
        }
    } catch (const DivergenceError&) {
        std::fill(row.begin(), row.end(), std::numeric_limits<double>::quiet_NaN());
        return kDivergedPeriod;
    }
    return detect_period(row, o.p_max, o.tol);
}

// The origin is invariant for every family here, so a branch that collapsed
// onto it would never leave; restart from x0 instead.
double warm_seed(const BifurcationDiagram& d, std::size_t i, const SweepOptions& o) {
    if (i == 0) {
        return o.x0;
    }
    const double prev = d.samples[i * d.keep_count - 1];
    return (std::isfinite(prev) && prev != 0.0) ? prev : o.x0;
}

BifurcationDiagram prepare(const MapFamily& family, Interval range, std::size_t grid_n,
                           const SweepOptions& o, std::vector<ScalarMap>& maps) {
    validate(range, grid_n, o);
    BifurcationDiagram d;
    d.param_grid = sweep_grid(range, grid_n, o.include_lower);
    d.keep_count = o.keep;
    d.samples.assign(grid_n * o.keep, 0.0);
    d.periods.assign(grid_n, 0);
    maps.reserve(grid_n);
    for (double param : d.param_grid) {
        maps.push_back(family.at(param));
    }
    return d;
}

void run_sequential(BifurcationDiagram& d, const std::vector<ScalarMap>& maps,
                    const SweepOptions& o) {
    for (std::size_t i = 0; i < maps.size(); ++i) {
        const double seed = o.warm_start ? warm_seed(d, i, o) : o.x0;
        d.periods[i] = sweep_point(maps[i], seed, o,
                                   std::span<double>(d.samples).subspan(i * o.keep, o.keep));
    }
}

}  // namespace

std::vector<double> sweep_grid(Interval range, std::size_t grid_n, bool include_lower) {
    if (grid_n < 2) {
        throw DomainError("sweep_grid: grid_n must be at least 2");
    }
    std::vector<double> grid(grid_n);
    const double w = range.width();
    for (std::size_t i = 0; i < grid_n; ++i) {
        grid[i] = include_lower
                      ? range.lo + w * static_cast<double>(i) / static_cast<double>(grid_n - 1)
                      : range.lo + w * static_cast<double>(i + 1) / static_cast<double>(grid_n);
    }
    grid.back() = range.hi;
    return grid;
}

BifurcationDiagram bifurcation_sweep_serial(const MapFamily& family, Interval range,
                                            std::size_t grid_n, const SweepOptions& options) {
    std::vector<ScalarMap> maps;
    BifurcationDiagram d = prepare(family, range, grid_n, options, maps);
    run_sequential(d, maps, options);
    return d;
}

BifurcationDiagram bifurcation_sweep(const MapFamily& family, Interval range, std::size_t grid_n,
                                     const SweepOptions& options) {
    std::vector<ScalarMap> maps;
    BifurcationDiagram d = prepare(family, range, grid_n, options, maps);
    if (options.warm_start) {
        run_sequential(d, maps, options);
        return d;
    }
    const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
    const auto n = static_cast<std::ptrdiff_t>(maps.size());
    const std::size_t keep = options.keep;
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto row = static_cast<std::size_t>(i);
        d.periods[row] = sweep_point(maps[row], options.x0, options,
                                     std::span<double>(d.samples).subspan(row * keep, keep));
    }
    return d;
}

}  // namespace ddmap

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ddmap/maps.hpp"

namespace ddmap {

/// Period value recorded for parameters whose orbit diverged.
inline constexpr int kDivergedPeriod = -1;

struct SweepOptions {
    double x0 = 1.0;
    std::size_t transient = 5000;
    std::size_t keep = 256;
    int p_max = 64;
    double tol = 1e-6;
    /// Seed each parameter with the previous parameter's last sample. Makes the
    /// sweep sequential.
    bool warm_start = true;
    /// When false the grid excludes range.lo: (lo, hi] in grid_n steps.
    bool include_lower = true;
    /// Upper bound on OpenMP threads for cold-start sweeps; 0 = runtime default.
    int threads = 0;
};

/// Attractor samples per parameter, stored row-major (grid_n x keep_count).
/// Rows of diverged parameters are NaN with period kDivergedPeriod.
struct BifurcationDiagram {
    std::vector<double> param_grid;
    std::size_t keep_count = 0;
    std::vector<double> samples;
    std::vector<int> periods;

    std::span<const double> samples_at(std::size_t i) const {
        return std::span<const double>(samples).subspan(i * keep_count, keep_count);
    }
};

std::vector<double> sweep_grid(Interval range, std::size_t grid_n, bool include_lower);

/// Period diagram of `family` over `range`. Warm-start sweeps run in grid
/// order on one thread; cold-start sweeps fan out over OpenMP threads. Output
/// is identical to bifurcation_sweep_serial either way.
BifurcationDiagram bifurcation_sweep(const MapFamily& family, Interval range, std::size_t grid_n,
                                     const SweepOptions& options = {});

/// Single-threaded reference implementation.
BifurcationDiagram bifurcation_sweep_serial(const MapFamily& family, Interval range,
                                            std::size_t grid_n, const SweepOptions& options = {});

}  // namespace ddmap

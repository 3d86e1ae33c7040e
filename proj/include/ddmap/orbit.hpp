#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ddmap/maps.hpp"

namespace ddmap {

/// Orbits leaving |x| <= kDivergenceBound are reported as divergent.
inline constexpr double kDivergenceBound = 1e6;

/// Post-transient iterates x_{transient+1}, ..., x_n of a map.
struct Orbit {
    std::vector<double> samples;
    std::size_t transient_len = 0;
    std::string map_id;
};

/// Iterates `map` from x0 and keeps x_{transient+1..n}.
///
/// Energy-domain maps (map.nonnegative) are clamped to max(x, 0) after every
/// step. Throws DomainError when n <= transient or x0 is outside the map's
/// domain, DivergenceError (with the 1-based iterate index) on blow-up.
Orbit iterate(const ScalarMap& map, double x0, std::size_t n, std::size_t transient);

/// Single step with the orbit layer's clamp and divergence check applied.
/// `index` is only used for the error report.
double orbit_step(const ScalarMap& map, double x, std::size_t index);

/// Applies `steps` orbit steps to x and returns the result. `first_index` is
/// the iterate number of the first step.
double advance(const ScalarMap& map, double x, std::size_t steps, std::size_t first_index = 1);

}  // namespace ddmap

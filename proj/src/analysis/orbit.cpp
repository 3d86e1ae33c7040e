#include "ddmap/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ddmap/error.hpp"

namespace ddmap {

double orbit_step(const ScalarMap& map, double x, std::size_t index) {
    double y = map.f(x);
    if (map.nonnegative) {
        y = std::max(y, 0.0);
    }
    if (!std::isfinite(y) || std::abs(y) > kDivergenceBound) {
        throw DivergenceError(index, y);
    }
    return y;
}

double advance(const ScalarMap& map, double x, std::size_t steps, std::size_t first_index) {
    for (std::size_t k = 0; k < steps; ++k) {
        x = orbit_step(map, x, first_index + k);
    }
    return x;
}

Orbit iterate(const ScalarMap& map, double x0, std::size_t n, std::size_t transient) {
    if (n <= transient) {
        throw DomainError("iterate: need n > transient (n = " + std::to_string(n) +
                          ", transient = " + std::to_string(transient) + ")");
    }
    if (!std::isfinite(x0) || (map.nonnegative && x0 < 0.0)) {
        throw DomainError("iterate: initial value " + std::to_string(x0) +
                          " is outside the map domain");
    }
    Orbit orbit;
    orbit.transient_len = transient;
    orbit.map_id = map.id;
    orbit.samples.reserve(n - transient);

    double x = advance(map, x0, transient, 1);
    for (std::size_t k = transient + 1; k <= n; ++k) {
        x = orbit_step(map, x, k);
        orbit.samples.push_back(x);
    }
    return orbit;
}

}  // namespace ddmap

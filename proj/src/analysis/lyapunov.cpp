#include "ddmap/lyapunov.hpp"

#include <cmath>

#include "ddmap/error.hpp"
#include "ddmap/orbit.hpp"
#include "ddmap/period.hpp"

namespace ddmap {

LyapunovEstimate lyapunov(const ScalarMap& map, double x0, std::size_t n, std::size_t transient) {
    if (!map.has_derivative()) {
        throw DomainError("lyapunov: map '" + map.id + "' has no derivative");
    }
    if (n <= transient) {
        throw DomainError("lyapunov: need n > transient");
    }
    constexpr double kFloor = 1e-300;
    const double log_floor = std::log(kFloor);

    LyapunovEstimate est;
    double sum = 0.0;
    double x = advance(map, x0, transient, 1);
    for (std::size_t k = transient + 1; k <= n; ++k) {
        x = orbit_step(map, x, k);
        const double slope = std::abs(map.df(x));
        if (slope < kFloor) {
            sum += log_floor;
            ++est.floored;
        } else {
            sum += std::log(slope);
        }
    }
    est.samples = n - transient;
    est.exponent = sum / static_cast<double>(est.samples);
    return est;
}

const char* to_string(Regime regime) noexcept {
    switch (regime) {
        case Regime::periodic:
            return "periodic";
        case Regime::chaotic:
            return "chaotic";
        case Regime::aperiodic:
            return "aperiodic";
    }
    return "unknown";
}

Regime classify(int period, double exponent) noexcept {
    if (period > 0) {
        return Regime::periodic;
    }
    return exponent > kChaosThreshold ? Regime::chaotic : Regime::aperiodic;
}

Classification classify_orbit(const ScalarMap& map, double x0, std::size_t transient,
                              std::size_t keep, std::size_t lyapunov_n, int p_max, double tol) {
    Classification out;
    out.period = detect_period(iterate(map, x0, transient + keep, transient), p_max, tol);
    out.lyapunov = lyapunov(map, x0, transient + lyapunov_n, transient).exponent;
    out.regime = classify(out.period, out.lyapunov);
    return out;
}

}  // namespace ddmap

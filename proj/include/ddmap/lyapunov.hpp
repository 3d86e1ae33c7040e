#pragma once

#include <cstddef>

#include "ddmap/maps.hpp"

namespace ddmap {

struct LyapunovEstimate {
    double exponent = 0.0;
    std::size_t samples = 0;
    /// Iterates where |f'| < 1e-300; each contributed log(1e-300).
    std::size_t floored = 0;
};

/// Mean of log|f'(x_k)| over the post-transient iterates x_{transient+1..n}.
/// Requires map.df. Throws DivergenceError as iterate() does.
LyapunovEstimate lyapunov(const ScalarMap& map, double x0, std::size_t n, std::size_t transient);

/// An orbit counts as chaotic when no period up to p_max is detected and the
/// Lyapunov exponent exceeds this threshold.
inline constexpr double kChaosThreshold = 0.01;

enum class Regime { periodic, chaotic, aperiodic };
const char* to_string(Regime regime) noexcept;

struct Classification {
    int period = 0;
    double lyapunov = 0.0;
    Regime regime = Regime::aperiodic;
};

Regime classify(int period, double exponent) noexcept;

/// Iterates once, detects the period on the last `keep` samples and estimates
/// the exponent over the same post-transient orbit.
Classification classify_orbit(const ScalarMap& map, double x0, std::size_t transient,
                              std::size_t keep, std::size_t lyapunov_n, int p_max = 64,
                              double tol = 1e-6);

}  // namespace ddmap

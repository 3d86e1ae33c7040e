#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace ddmap::test {

// Relative distance with an absolute floor so values near zero compare sanely.
inline double rel_err(double got, double want, double floor = 0.0) {
    const double denom = std::max({std::abs(want), std::abs(got), floor});
    return denom == 0.0 ? 0.0 : std::abs(got - want) / denom;
}

inline std::vector<double> random_uniform(std::size_t n, double lo, double hi,
                                          unsigned seed = 12345) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> out(n);
    for (auto& x : out) {
        x = dist(rng);
    }
    return out;
}

// Period-2 points of rx(1-x): roots of the quadratic left after dividing out the fixed points.
inline std::pair<double, double> logistic_two_cycle(double r) {
    const double disc = std::sqrt((r + 1.0) * (r - 3.0));
    return {((r + 1.0) - disc) / (2.0 * r), ((r + 1.0) + disc) / (2.0 * r)};
}

}  // namespace ddmap::test

namespace ddmap::test {

// Distinct periods in order along the grid, stopping at the first run of at
// least `chaos_run` aperiodic points. Shorter zero runs come from slow
// convergence next to a flip and are skipped.
inline std::vector<int> period_ladder(const std::vector<int>& periods, std::size_t chaos_run = 5) {
    std::vector<int> ladder;
    std::size_t zeros = 0;
    for (int p : periods) {
        if (p == 0) {
            if (++zeros >= chaos_run) {
                break;
            }
            continue;
        }
        zeros = 0;
        if (ladder.empty() || ladder.back() != p) {
            ladder.push_back(p);
        }
    }
    return ladder;
}

}  // namespace ddmap::test

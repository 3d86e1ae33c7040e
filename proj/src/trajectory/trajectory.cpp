#include "ddmap/trajectory.hpp"

#include <algorithm>
#include <cmath>

#include "ddmap/error.hpp"
#include "ddmap/lyapunov.hpp"
#include "ddmap/maps.hpp"
#include "ddmap/orbit.hpp"

namespace ddmap {
namespace {

double wrap(double x, double L) {
    double w = std::fmod(x, L);
    if (w < 0.0) {
        w += L;
    }
    return w >= L ? 0.0 : w;
}

}  // namespace

WalkerPath simulate_walk(const KickParams& p, double v0, std::size_t impacts,
                         double circumference, double dt) {
    if (impacts < 1) {
        throw DomainError("simulate_walk: impacts must be at least 1");
    }
    if (!(circumference > 0.0) || !(dt > 0.0)) {
        throw DomainError("simulate_walk: circumference and dt must be positive");
    }
    WalkerPath path;
    path.circumference = circumference;
    path.dt = dt;
    path.velocities = iterate(kick_velocity_map(p), v0, impacts, 0).samples;
    path.unwrapped.reserve(impacts);
    path.positions.reserve(impacts);
    double x = 0.0;
    for (double v : path.velocities) {
        x += v * dt;
        path.unwrapped.push_back(x);
        path.positions.push_back(wrap(x, circumference));
    }
    return path;
}

std::size_t Histogram::occupied_bins() const {
    return static_cast<std::size_t>(
        std::count_if(counts.begin(), counts.end(), [](std::size_t c) { return c > 0; }));
}

PathStats path_stats(const WalkerPath& path, double bin_width, std::size_t skip) {
    if (path.size() == 0 || skip >= path.size()) {
        throw DomainError("path_stats: no impacts to summarise");
    }
    if (!(bin_width > 0.0)) {
        throw DomainError("path_stats: bin width must be positive");
    }
    PathStats stats;
    stats.displacement.bin_width = bin_width;

    double speed_sum = 0.0;
    int last_sign = 0;
    for (std::size_t i = skip; i < path.size(); ++i) {
        const double v = path.velocities[i];
        speed_sum += std::abs(v);
        const int sign = (v > 0.0) - (v < 0.0);
        if (sign != 0) {
            if (last_sign != 0 && sign != last_sign) {
                ++stats.direction_switch_count;
            }
            last_sign = sign;
        }
        const double previous = i == 0 ? 0.0 : path.unwrapped[i - 1];
        const double step = std::abs(path.unwrapped[i] - previous);
        const auto bin = static_cast<std::size_t>(std::floor(step / bin_width));
        if (bin >= stats.displacement.counts.size()) {
            stats.displacement.counts.resize(bin + 1, 0);
        }
        ++stats.displacement.counts[bin];
    }
    stats.mean_speed = speed_sum / static_cast<double>(path.size() - skip);
    return stats;
}

const char* to_string(WalkRegime regime) noexcept {
    switch (regime) {
        case WalkRegime::steady:
            return "steady";
        case WalkRegime::two_step:
            return "two-step";
        case WalkRegime::periodic:
            return "periodic";
        case WalkRegime::chaotic:
            return "chaotic";
        case WalkRegime::aperiodic:
            return "aperiodic";
    }
    return "unknown";
}

WalkClassification classify_walk(const KickParams& p, double v0, std::size_t transient,
                                 std::size_t keep, std::size_t lyapunov_n) {
    const Classification c =
        classify_orbit(kick_velocity_map(p), v0, transient, keep, lyapunov_n);
    WalkClassification out;
    out.period = c.period;
    out.lyapunov = c.lyapunov;
    if (c.period == 1) {
        out.regime = WalkRegime::steady;
    } else if (c.period == 2) {
        out.regime = WalkRegime::two_step;
    } else if (c.period > 2) {
        out.regime = WalkRegime::periodic;
    } else {
        out.regime = c.regime == Regime::chaotic ? WalkRegime::chaotic : WalkRegime::aperiodic;
    }
    return out;
}

}  // namespace ddmap

#include "ddmap/cobweb.hpp"

#include <algorithm>
#include <cmath>

#include "ddmap/error.hpp"
#include "ddmap/orbit.hpp"

namespace ddmap {
namespace {

void check_state(double x, std::size_t index) {
    if (!std::isfinite(x) || std::abs(x) > kDivergenceBound) {
        throw DivergenceError(index, x);
    }
}

struct Extent {
    double lo = 0.0;
    double hi = 0.0;
};

Extent padded(double lo, double hi) {
    const double pad = 0.05 * std::max({hi - lo, std::abs(hi), std::abs(lo), 1e-300});
    return {lo - pad, hi + pad};
}

// Samples points of a curve, silently skipping abscissae outside the curve's domain.
template <typename Make>
std::vector<Point> sample_curve(Extent range, std::size_t n, Make make) {
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = range.lo + (range.hi - range.lo) * static_cast<double>(i) /
                                        static_cast<double>(n - 1);
        try {
            const Point p = make(t);
            if (std::isfinite(p.x) && std::isfinite(p.y)) {
                pts.push_back(p);
            }
        } catch (const DomainError&) {
        }
    }
    return pts;
}

}  // namespace

const char* to_string(SegmentKind kind) noexcept {
    switch (kind) {
        case SegmentKind::gain_step:
            return "gain";
        case SegmentKind::loss_step:
            return "loss";
        case SegmentKind::to_curve:
            return "to-curve";
        case SegmentKind::to_diagonal:
            return "to-diagonal";
    }
    return "unknown";
}

std::vector<double> CobwebTrace::states() const {
    std::vector<double> out;
    for (const Segment& s : segments) {
        if (!two_step && s.kind == SegmentKind::to_diagonal) {
            out.push_back(s.to.x);
        } else if (two_step && state == CycleState::post_loss && s.kind == SegmentKind::loss_step) {
            out.push_back(s.to.y);
        } else if (two_step && state == CycleState::post_gain && s.kind == SegmentKind::gain_step) {
            out.push_back(s.to.x);
        }
    }
    return out;
}

CobwebTrace cobweb_trace(const GainLossSystem& system, double x0, std::size_t steps,
                         std::size_t curve_samples) {
    if (steps < 1) {
        throw DomainError("cobweb_trace: steps must be at least 1");
    }
    if (!std::isfinite(x0) || (system.nonnegative && x0 < 0.0)) {
        throw DomainError("cobweb_trace: initial value outside the system domain");
    }
    const bool clamp = system.nonnegative;
    auto c = [clamp](double v) { return clamp ? std::max(v, 0.0) : v; };

    CobwebTrace trace;
    trace.two_step = true;
    trace.state = system.state;
    trace.segments.reserve(2 * steps);

    if (system.state == CycleState::post_loss) {
        Point at{0.0, x0};
        for (std::size_t k = 1; k <= steps; ++k) {
            const double gained = c(system.gain(at.y));
            const Point on_gain{gained, at.y};
            trace.segments.push_back({at, on_gain, SegmentKind::gain_step});
            const double lost = c(system.loss(gained));
            check_state(lost, k);
            const Point on_loss{gained, lost};
            trace.segments.push_back({on_gain, on_loss, SegmentKind::loss_step});
            at = on_loss;
        }
    } else {
        Point at{x0, 0.0};
        for (std::size_t k = 1; k <= steps; ++k) {
            const double lost = c(system.loss(at.x));
            const Point on_loss{at.x, lost};
            trace.segments.push_back({at, on_loss, SegmentKind::loss_step});
            const double gained = c(system.gain(lost));
            check_state(gained, k);
            const Point on_gain{gained, lost};
            trace.segments.push_back({on_loss, on_gain, SegmentKind::gain_step});
            at = on_gain;
        }
    }

    double xmax = 0.0;
    double ymax = 0.0;
    for (const Segment& s : trace.segments) {
        xmax = std::max({xmax, s.from.x, s.to.x});
        ymax = std::max({ymax, s.from.y, s.to.y});
    }
    if (xmax <= 0.0) {
        xmax = system.domain.hi;
    }
    if (ymax <= 0.0) {
        ymax = system.domain.hi;
    }
    trace.primary_curve = sample_curve(Extent{0.0, 1.1 * ymax}, curve_samples, [&](double y) {
        return Point{system.gain(y), y};
    });
    trace.secondary_curve = sample_curve(Extent{0.0, 1.1 * xmax}, curve_samples, [&](double x) {
        return Point{x, system.loss(x)};
    });
    return trace;
}

CobwebTrace cobweb_trace(const ScalarMap& map, double x0, std::size_t steps,
                         std::size_t curve_samples) {
    if (steps < 1) {
        throw DomainError("cobweb_trace: steps must be at least 1");
    }
    if (!std::isfinite(x0) || (map.nonnegative && x0 < 0.0)) {
        throw DomainError("cobweb_trace: initial value outside the map domain");
    }
    CobwebTrace trace;
    trace.segments.reserve(2 * steps);
    double x = x0;
    double lo = x0;
    double hi = x0;
    for (std::size_t k = 1; k <= steps; ++k) {
        const double y = orbit_step(map, x, k);
        trace.segments.push_back({{x, x}, {x, y}, SegmentKind::to_curve});
        trace.segments.push_back({{x, y}, {y, y}, SegmentKind::to_diagonal});
        x = y;
        lo = std::min(lo, y);
        hi = std::max(hi, y);
    }
    const Extent range = padded(lo, hi);
    trace.primary_curve = sample_curve(range, curve_samples, [&](double t) {
        return Point{t, map.f(t)};
    });
    trace.secondary_curve = {{range.lo, range.lo}, {range.hi, range.hi}};
    return trace;
}

}  // namespace ddmap

#pragma once

#include <cstddef>
#include <vector>

#include "ddmap/maps.hpp"

namespace ddmap {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// gain_step / loss_step belong to two-step traces, to_curve / to_diagonal to
/// ordinary one-step cobwebs.
enum class SegmentKind { gain_step, loss_step, to_curve, to_diagonal };

const char* to_string(SegmentKind kind) noexcept;

struct Segment {
    Point from;
    Point to;
    SegmentKind kind = SegmentKind::to_curve;
};

/// Cobweb construction plus sampled curves for plotting.
///
/// Two-step traces live in the (E^gain, E^loss) plane: the loss curve is
/// y = T(x) and the gain curve is x = G(y). A gain step is the horizontal
/// move from the loss curve to the gain curve, a loss step the vertical move
/// from the gain curve to the loss curve.
///
/// One-step traces use (x_n, x_{n+1}) with the map curve and the diagonal.
struct CobwebTrace {
    std::vector<Segment> segments;
    /// Gain curve (two-step) or map graph (one-step).
    std::vector<Point> primary_curve;
    /// Loss curve (two-step) or the diagonal (one-step).
    std::vector<Point> secondary_curve;
    bool two_step = false;
    CycleState state = CycleState::post_loss;

    /// The state sequence x_1, x_2, ... read back off the vertices. It equals
    /// iterate() of the corresponding cycle map exactly.
    std::vector<double> states() const;
};

/// Two-step cobweb of `steps` full cycles starting from state x0.
/// Throws DivergenceError as iterate() does.
CobwebTrace cobweb_trace(const GainLossSystem& system, double x0, std::size_t steps,
                         std::size_t curve_samples = 400);

/// Classic cobweb for a one-step map.
CobwebTrace cobweb_trace(const ScalarMap& map, double x0, std::size_t steps,
                         std::size_t curve_samples = 400);

}  // namespace ddmap

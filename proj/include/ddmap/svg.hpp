#pragma once

#include <string>
#include <vector>

#include "ddmap/cobweb.hpp"

namespace ddmap {

struct SvgStyle {
    std::string color = "#000000";
    double width = 1.0;
    std::string dash;  // stroke-dasharray, empty for solid
    double opacity = 1.0;
};

/// Minimal self-contained SVG chart: polylines, line segments and point
/// clouds on independently auto-scaled axes (5% margins). Output depends only
/// on the inputs, byte for byte.
class SvgPlot {
public:
    SvgPlot(int width = 640, int height = 480);

    void set_title(std::string title) { title_ = std::move(title); }
    void set_axis_labels(std::string x, std::string y);
    /// Tick values are printed unless disabled (curves on wildly different
    /// scales read better without them).
    void show_axis_values(bool show) { show_values_ = show; }

    void add_polyline(std::vector<Point> points, SvgStyle style);
    void add_segments(const std::vector<Segment>& segments, SvgStyle style);
    /// Points are snapped to the pixel grid and deduplicated.
    void add_points(const std::vector<Point>& points, SvgStyle style);

    std::string render() const;

private:
    struct Layer {
        enum class Kind { polyline, segments, points } kind;
        std::vector<Point> points;  // segments are stored as consecutive pairs
        SvgStyle style;
    };

    int width_;
    int height_;
    std::string title_;
    std::string x_label_;
    std::string y_label_;
    bool show_values_ = true;
    std::vector<Layer> layers_;
};

}  // namespace ddmap

#include "ddmap/svg.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

#include "ddmap/format.hpp"

namespace ddmap {
namespace {

constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 36.0;
constexpr double kMarginBottom = 50.0;
constexpr int kTicks = 5;

std::string coord(double v) { return format_fixed(v, 2); }

std::string tick_label(double v) {
    std::array<char, 64> buf{};
    const auto res =
        std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 3);
    return std::string(buf.data(), res.ptr);
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '&':
                out += "&amp;";
                break;
            case '"':
                out += "&quot;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

std::string stroke_attrs(const SvgStyle& s) {
    std::string a = "fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"" +
                    format_fixed(s.width, 2) + "\"";
    if (!s.dash.empty()) {
        a += " stroke-dasharray=\"" + s.dash + "\"";
    }
    if (s.opacity < 1.0) {
        a += " stroke-opacity=\"" + format_fixed(s.opacity, 2) + "\"";
    }
    return a;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v) {
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    Range padded() const {
        if (!(lo <= hi)) {
            return {0.0, 1.0};
        }
        double span = hi - lo;
        if (span <= 0.0) {
            span = std::max(std::abs(hi), 1e-300);
        }
        return {lo - 0.05 * span, hi + 0.05 * span};
    }
};

}  // namespace

SvgPlot::SvgPlot(int width, int height) : width_(width), height_(height) {}

void SvgPlot::set_axis_labels(std::string x, std::string y) {
    x_label_ = std::move(x);
    y_label_ = std::move(y);
}

void SvgPlot::add_polyline(std::vector<Point> points, SvgStyle style) {
    layers_.push_back({Layer::Kind::polyline, std::move(points), std::move(style)});
}

void SvgPlot::add_segments(const std::vector<Segment>& segments, SvgStyle style) {
    std::vector<Point> pts;
    pts.reserve(2 * segments.size());
    for (const Segment& s : segments) {
        pts.push_back(s.from);
        pts.push_back(s.to);
    }
    layers_.push_back({Layer::Kind::segments, std::move(pts), std::move(style)});
}

void SvgPlot::add_points(const std::vector<Point>& points, SvgStyle style) {
    layers_.push_back({Layer::Kind::points, points, std::move(style)});
}

std::string SvgPlot::render() const {
    Range xr;
    Range yr;
    for (const Layer& layer : layers_) {
        for (const Point& p : layer.points) {
            xr.add(p.x);
            yr.add(p.y);
        }
    }
    xr = xr.padded();
    yr = yr.padded();

    const double plot_w = width_ - kMarginLeft - kMarginRight;
    const double plot_h = height_ - kMarginTop - kMarginBottom;
    auto px = [&](double x) { return kMarginLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
    auto py = [&](double y) { return kMarginTop + (yr.hi - y) / (yr.hi - yr.lo) * plot_h; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\""
        << height_ << "\" viewBox=\"0 0 " << width_ << ' ' << height_ << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << width_ << "\" height=\"" << height_
        << "\" fill=\"#ffffff\"/>\n";
    if (!title_.empty()) {
        out << "<text x=\"" << coord(width_ / 2.0)
            << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
            << escape(title_) << "</text>\n";
    }

    // Axes box.
    out << "<rect x=\"" << coord(kMarginLeft) << "\" y=\"" << coord(kMarginTop) << "\" width=\""
        << coord(plot_w) << "\" height=\"" << coord(plot_h)
        << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    for (int i = 0; i <= kTicks; ++i) {
        const double fx = xr.lo + (xr.hi - xr.lo) * i / kTicks;
        const double fy = yr.lo + (yr.hi - yr.lo) * i / kTicks;
        const double X = px(fx);
        const double Y = py(fy);
        const double bottom = kMarginTop + plot_h;
        out << "<line x1=\"" << coord(X) << "\" y1=\"" << coord(bottom) << "\" x2=\"" << coord(X)
            << "\" y2=\"" << coord(bottom + 5) << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
        out << "<line x1=\"" << coord(kMarginLeft - 5) << "\" y1=\"" << coord(Y) << "\" x2=\""
            << coord(kMarginLeft) << "\" y2=\"" << coord(Y)
            << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
        if (show_values_) {
            out << "<text x=\"" << coord(X) << "\" y=\"" << coord(bottom + 18)
                << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">"
                << tick_label(fx) << "</text>\n";
            out << "<text x=\"" << coord(kMarginLeft - 8) << "\" y=\"" << coord(Y + 3)
                << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
                << tick_label(fy) << "</text>\n";
        }
    }
    if (!x_label_.empty()) {
        out << "<text x=\"" << coord(kMarginLeft + plot_w / 2) << "\" y=\""
            << coord(height_ - 10.0)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
            << escape(x_label_) << "</text>\n";
    }
    if (!y_label_.empty()) {
        const double cy = kMarginTop + plot_h / 2;
        out << "<text x=\"14\" y=\"" << coord(cy) << "\" transform=\"rotate(-90 14 " << coord(cy)
            << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
            << escape(y_label_) << "</text>\n";
    }

    for (const Layer& layer : layers_) {
        switch (layer.kind) {
            case Layer::Kind::polyline: {
                out << "<polyline " << stroke_attrs(layer.style) << " points=\"";
                bool first = true;
                for (const Point& p : layer.points) {
                    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
                        continue;
                    }
                    out << (first ? "" : " ") << coord(px(p.x)) << ',' << coord(py(p.y));
                    first = false;
                }
                out << "\"/>\n";
                break;
            }
            case Layer::Kind::segments: {
                out << "<path " << stroke_attrs(layer.style) << " d=\"";
                for (std::size_t i = 0; i + 1 < layer.points.size(); i += 2) {
                    const Point& a = layer.points[i];
                    const Point& b = layer.points[i + 1];
                    out << (i == 0 ? "" : " ") << 'M' << coord(px(a.x)) << ' ' << coord(py(a.y))
                        << 'L' << coord(px(b.x)) << ' ' << coord(py(b.y));
                }
                out << "\"/>\n";
                break;
            }
            case Layer::Kind::points: {
                std::set<std::pair<long, long>> pixels;
                for (const Point& p : layer.points) {
                    if (std::isfinite(p.x) && std::isfinite(p.y)) {
                        pixels.emplace(std::lround(px(p.x)), std::lround(py(p.y)));
                    }
                }
                out << "<path fill=\"" << layer.style.color << "\" stroke=\"none\" d=\"";
                bool first = true;
                for (const auto& [x, y] : pixels) {
                    out << (first ? "" : " ") << 'M' << x << ' ' << y << "h1v1h-1z";
                    first = false;
                }
                out << "\"/>\n";
                break;
            }
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace ddmap

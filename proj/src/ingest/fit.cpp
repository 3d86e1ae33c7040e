#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "ddmap/error.hpp"
#include "ddmap/ingest.hpp"

namespace ddmap {
namespace {

using Pairs = std::vector<std::pair<double, double>>;

std::size_t count_distinct(const Pairs& pts) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i == 0 || pts[i].first != pts[i - 1].first) {
            ++n;
        }
    }
    return n;
}

void fit_linear(const Pairs& pts, FittedCurve& c) {
    double sxy = 0.0;
    double sxx = 0.0;
    for (const auto& [x, y] : pts) {
        sxy += x * y;
        sxx += x * x;
    }
    if (sxx == 0.0) {
        throw RankDeficiencyError("fit_curve: all abscissae are zero; slope is undetermined");
    }
    c.coefficients = {sxy / sxx};
}

void fit_polynomial(const Pairs& pts, int degree, FittedCurve& c) {
    if (degree < 1 || degree > 6) {
        throw DomainError("fit_curve: polynomial degree must be in 1..6");
    }
    if (count_distinct(pts) < static_cast<std::size_t>(degree) + 1) {
        throw RankDeficiencyError("fit_curve: fewer distinct abscissae than polynomial coefficients");
    }
    c.center = 0.5 * (c.hull.lo + c.hull.hi);
    c.scale = 0.5 * (c.hull.hi - c.hull.lo);
    const auto rows = static_cast<Eigen::Index>(pts.size());
    Eigen::MatrixXd A(rows, degree + 1);
    Eigen::VectorXd b(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const double t = (pts[i].first - c.center) / c.scale;
        double power = 1.0;
        for (int j = 0; j <= degree; ++j) {
            A(i, j) = power;
            power *= t;
        }
        b(i) = pts[i].second;
    }
    const Eigen::VectorXd coef = A.colPivHouseholderQr().solve(b);
    c.coefficients.assign(coef.data(), coef.data() + coef.size());
}

void fit_piecewise(const Pairs& pts, std::size_t bins, FittedCurve& c) {
    if (bins < 1) {
        throw DomainError("fit_curve: piecewise-linear fit needs at least one bin");
    }
    if (count_distinct(pts) < 2) {
        throw RankDeficiencyError("fit_curve: all abscissae are identical");
    }
    std::vector<double> sx(bins, 0.0);
    std::vector<double> sy(bins, 0.0);
    std::vector<std::size_t> n(bins, 0);
    const double width = c.hull.hi - c.hull.lo;
    for (const auto& [x, y] : pts) {
        auto b = static_cast<std::size_t>(std::floor((x - c.hull.lo) / width * static_cast<double>(bins)));
        b = std::min(b, bins - 1);
        sx[b] += x;
        sy[b] += y;
        ++n[b];
    }
    for (std::size_t b = 0; b < bins; ++b) {
        if (n[b] > 0) {
            c.knots_x.push_back(sx[b] / static_cast<double>(n[b]));
            c.knots_y.push_back(sy[b] / static_cast<double>(n[b]));
        }
    }
    if (c.knots_x.size() >= 2) {
        return;
    }
    // Everything landed in one bin: fall back to one knot per distinct abscissa.
    c.knots_x.clear();
    c.knots_y.clear();
    for (std::size_t i = 0; i < pts.size();) {
        std::size_t j = i;
        double sum = 0.0;
        while (j < pts.size() && pts[j].first == pts[i].first) {
            sum += pts[j].second;
            ++j;
        }
        c.knots_x.push_back(pts[i].first);
        c.knots_y.push_back(sum / static_cast<double>(j - i));
        i = j;
    }
}

}  // namespace

const char* to_string(CurveKind kind) noexcept {
    switch (kind) {
        case CurveKind::linear_through_origin:
            return "linear-through-origin";
        case CurveKind::polynomial:
            return "polynomial";
        case CurveKind::piecewise_linear:
            return "piecewise-linear";
    }
    return "unknown";
}

CurveKind parse_curve_kind(const std::string& text) {
    if (text == "linear-through-origin" || text == "linear") {
        return CurveKind::linear_through_origin;
    }
    if (text == "polynomial") {
        return CurveKind::polynomial;
    }
    if (text == "piecewise-linear") {
        return CurveKind::piecewise_linear;
    }
    throw DomainError("unknown curve kind '" + text + "'");
}

double FittedCurve::operator()(double x) const {
    switch (kind) {
        case CurveKind::linear_through_origin:
            return coefficients.front() * x;
        case CurveKind::polynomial: {
            const double t = (x - center) / scale;
            double acc = 0.0;
            for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
                acc = acc * t + *it;
            }
            return acc;
        }
        case CurveKind::piecewise_linear: {
            const auto upper = std::upper_bound(knots_x.begin(), knots_x.end(), x);
            std::size_t i = static_cast<std::size_t>(upper - knots_x.begin());
            i = std::clamp<std::size_t>(i, 1, knots_x.size() - 1);
            const double x0 = knots_x[i - 1];
            const double x1 = knots_x[i];
            const double w = (x - x0) / (x1 - x0);
            return knots_y[i - 1] + w * (knots_y[i] - knots_y[i - 1]);
        }
    }
    return 0.0;
}

FittedCurve fit_curve(std::span<const double> xs, std::span<const double> ys, const FitSpec& spec) {
    if (xs.size() != ys.size()) {
        throw DomainError("fit_curve: abscissae and ordinates differ in length");
    }
    if (xs.size() < 4) {
        throw DomainError("fit_curve: need at least 4 points, got " + std::to_string(xs.size()));
    }
    Pairs pts(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) {
            throw DomainError("fit_curve: non-finite data point");
        }
        pts[i] = {xs[i], ys[i]};
    }
    // Sorting first makes every sum below independent of the input order.
    std::sort(pts.begin(), pts.end());

    FittedCurve c;
    c.kind = spec.kind;
    c.hull = {pts.front().first, pts.back().first};
    switch (spec.kind) {
        case CurveKind::linear_through_origin:
            fit_linear(pts, c);
            break;
        case CurveKind::polynomial:
            fit_polynomial(pts, spec.degree, c);
            break;
        case CurveKind::piecewise_linear:
            fit_piecewise(pts, spec.bins, c);
            break;
    }
    double ss = 0.0;
    for (const auto& [x, y] : pts) {
        const double r = y - c(x);
        ss += r * r;
    }
    c.residual_rms = std::sqrt(ss / static_cast<double>(pts.size()));
    return c;
}

CurveFits fit_curves(const EnergySeries& series, const FitSpec& loss_spec,
                     const FitSpec& gain_spec) {
    CurveFits fits;
    fits.loss = fit_curve(series.pre_impact, series.post_impact, loss_spec);
    const std::size_t n = series.pre_impact.size();
    fits.gain = fit_curve(std::span<const double>(series.post_impact).first(n - 1),
                          std::span<const double>(series.pre_impact).subspan(1), gain_spec);
    return fits;
}

Interval empirical_domain(const CurveFits& fits) {
    Interval d = fits.loss.hull;
    const Interval g = fits.gain.hull;
    const FittedCurve& loss = fits.loss;
    auto solve = [&](double target) {
        double a = d.lo;
        double b = d.hi;
        double fa = loss(a) - target;
        double fb = loss(b) - target;
        if (fa * fb > 0.0) {
            return std::abs(fa) < std::abs(fb) ? a : b;
        }
        for (int i = 0; i < 200 && b - a > 0.0; ++i) {
            const double m = a + 0.5 * (b - a);
            if (m <= a || m >= b) {
                break;
            }
            const double fm = loss(m) - target;
            if ((fm < 0.0) == (fa < 0.0)) {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
        return b;
    };
    if (loss.kind == CurveKind::linear_through_origin && loss.coefficients.front() > 0.0) {
        const double s = loss.coefficients.front();
        d.lo = std::max(d.lo, g.lo / s);
        d.hi = std::min(d.hi, g.hi / s);
    } else {
        const double lo = solve(g.lo);
        const double hi = solve(g.hi);
        d.lo = std::max(d.lo, std::min(lo, hi));
        d.hi = std::min(d.hi, std::max(lo, hi));
    }
    return d;
}

GainLossSystem empirical_system(const CurveFits& fits) {
    const FittedCurve gain = fits.gain;
    const FittedCurve loss = fits.loss;
    return GainLossSystem{
        [gain](double E) { return gain(E); },
        [loss](double E) { return loss(E); },
        empirical_domain(fits),
        CycleState::post_gain,
        true,
        "empirical",
    };
}

FixedPointSet empirical_fixed_points(const CurveFits& fits, std::size_t grid_n) {
    const GainLossSystem system = empirical_system(fits);
    return fixed_points(cycle_map(system).f, {}, system.domain, grid_n);
}

nlohmann::json to_json(const FittedCurve& curve) {
    nlohmann::json j;
    j["kind"] = to_string(curve.kind);
    switch (curve.kind) {
        case CurveKind::linear_through_origin:
            j["slope"] = curve.coefficients.front();
            break;
        case CurveKind::polynomial:
            j["coefficients"] = curve.coefficients;
            j["center"] = curve.center;
            j["scale"] = curve.scale;
            break;
        case CurveKind::piecewise_linear:
            j["knots_x"] = curve.knots_x;
            j["knots_y"] = curve.knots_y;
            break;
    }
    j["hull"] = {curve.hull.lo, curve.hull.hi};
    j["residual_rms"] = curve.residual_rms;
    return j;
}

nlohmann::json ingest_report(const EnergySeries& series, const CurveFits& fits) {
    nlohmann::json j;
    j["gains"] = series.gains;
    j["losses"] = series.losses;
    j["fit"]["loss"] = to_json(fits.loss);
    j["fit"]["gain"] = to_json(fits.gain);
    return j;
}

}  // namespace ddmap

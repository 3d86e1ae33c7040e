#pragma once

// Experimental energy inference: measured approach/launch speeds per impact
// become pre/post-impact energies, per-impact gain/loss energies and fitted
// gain/loss curves that can be cobwebbed like the model's.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include <json.hpp>

#include "ddmap/fixed_points.hpp"
#include "ddmap/kick.hpp"
#include "ddmap/maps.hpp"

namespace ddmap {

struct ImpactRecord {
    long long index = 0;
    double v_in = 0.0;   // approach speed relative to the table
    double v_out = 0.0;  // launch speed relative to the table
};

/// Reads the `n,v_in,v_out` CSV schema. Blank lines and lines starting with
/// '#' are skipped. Throws ParseError / ValidationError with the line number.
std::vector<ImpactRecord> parse_impacts(std::istream& in);

/// Writes the same schema with 17 significant digits.
void write_impacts(std::ostream& out, std::span<const ImpactRecord> records);

struct EnergySeries {
    std::vector<double> pre_impact;   // E_n^- = v_in^2
    std::vector<double> post_impact;  // E_n^+ = v_out^2
    std::vector<double> gains;        // E_n^- - E_{n-1}^+, n >= 1
    std::vector<double> losses;       // E_n^+ - E_n^-, n >= 1 (negative when dissipative)
};

/// Throws DomainError for fewer than two records.
EnergySeries energy_series(std::span<const ImpactRecord> records);

enum class CurveKind { linear_through_origin, polynomial, piecewise_linear };
const char* to_string(CurveKind kind) noexcept;
CurveKind parse_curve_kind(const std::string& text);

struct FitSpec {
    CurveKind kind = CurveKind::linear_through_origin;
    int degree = 3;          // polynomial only, 1..6
    std::size_t bins = 32;   // piecewise_linear only
};

/// A least-squares curve y(x).
///
/// Polynomials are stored in the scaled variable t = (x - center) / scale so
/// that energies of any magnitude stay well conditioned. Piecewise-linear
/// curves interpolate binned means and extend their end segments linearly.
struct FittedCurve {
    CurveKind kind = CurveKind::linear_through_origin;
    std::vector<double> coefficients;  // slope, or polynomial in t (ascending powers)
    double center = 0.0;
    double scale = 1.0;
    std::vector<double> knots_x;
    std::vector<double> knots_y;
    Interval hull;
    double residual_rms = 0.0;

    double operator()(double x) const;
};

/// Throws DomainError for fewer than 4 points and RankDeficiencyError when the
/// abscissae cannot determine the curve.
FittedCurve fit_curve(std::span<const double> xs, std::span<const double> ys, const FitSpec& spec);

struct CurveFits {
    FittedCurve gain;  // E_n^- against E_{n-1}^+
    FittedCurve loss;  // E_n^+ against E_n^-
};

CurveFits fit_curves(const EnergySeries& series,
                     const FitSpec& loss_spec = {CurveKind::linear_through_origin},
                     const FitSpec& gain_spec = {CurveKind::piecewise_linear});

/// Fitted curves as a two-step system whose state is the pre-impact energy:
/// one cycle is gain(loss(E)).
GainLossSystem empirical_system(const CurveFits& fits);

/// Pre-impact energies E whose loss image stays inside the gain fit's hull,
/// intersected with the loss fit's hull.
Interval empirical_domain(const CurveFits& fits);

/// Fixed points of the empirical cycle on empirical_domain().
FixedPointSet empirical_fixed_points(const CurveFits& fits, std::size_t grid_n = 20001);

/// {gains, losses, fit: {loss, gain}} document.
nlohmann::json ingest_report(const EnergySeries& series, const CurveFits& fits);
nlohmann::json to_json(const FittedCurve& curve);

struct SyntheticImpactOptions {
    double v0 = 0.15;
    std::size_t count = 64;
    /// Relative Gaussian noise on each measured speed: v (1 + noise xi).
    double noise = 0.0;
    std::uint64_t seed = 1;
};

/// Impact records generated by the kick model: v_in(n) = |v_n| along the
/// velocity orbit from v0 and v_out(n) = C v_in(n), so that the loss is the
/// C^2 damping and the gain between impacts is the kick.
std::vector<ImpactRecord> synthesize_impacts(const KickParams& p,
                                             const SyntheticImpactOptions& options = {});

}  // namespace ddmap

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "ddmap/kick.hpp"
#include "ddmap/maps.hpp"

namespace ddmap::cli {

/// Parsed command line. Optional fields fall back to per-map defaults.
struct RunConfig {
    std::string subcommand;

    std::string map = "kick";  // kick | logistic | two-step-logistic
    std::optional<std::string> c_frac;
    std::optional<double> c;
    double r = 2.5;
    std::optional<double> omega;
    std::optional<double> nu;
    std::string variant = "exact-square";
    std::string domain = "energy";  // kick only: energy | velocity

    std::optional<double> x0;
    std::size_t n = 1000;
    std::size_t transient = 0;
    std::optional<std::size_t> lyapunov_transient;
    std::size_t steps = 100;
    bool one_step = false;

    std::optional<std::string> range;
    std::size_t grid = 2000;
    std::size_t sweep_transient = 5000;
    std::size_t keep = 256;
    int p_max = 64;
    double tol = 1e-6;
    bool cold = false;
    std::optional<std::string> svg_path;

    std::optional<std::string> search_range;
    std::size_t grid_n = 50001;

    double v0 = 1.0;
    std::size_t impacts = 1000;
    double circumference = 10.0 * 3.14159265358979323846;
    double dt = 1.0;
    bool stats = false;
    double bin_width = 0.01;
    std::size_t skip = 0;

    std::string input = "-";
    std::string loss_kind = "linear-through-origin";
    std::string gain_kind = "piecewise-linear";
    std::size_t bins = 32;
    int degree = 3;

    std::size_t count = 64;
    double noise = 0.0;
    std::uint64_t seed = 1;
    std::optional<double> synth_v0;

    std::string format;  // empty = subcommand default
    std::string output;  // empty = stdout
    bool no_axis_values = false;
    int threads = 0;
};

/// Thrown for invalid flag combinations; maps to exit code 1.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_kick(const RunConfig& cfg);
EnergyVariant variant_of(const RunConfig& cfg);

/// Kick parameters from --c-frac (C = a/(bK)) or --c plus omega/nu overrides.
KickParams kick_params(const RunConfig& cfg);
/// Kick parameters with C = c_times_K / K for the configured omega and nu.
KickParams kick_params_fraction(const RunConfig& cfg, double c_times_K);

/// The map iterated by simulate, lyapunov, fixed-points and three-cycles.
ScalarMap selected_map(const RunConfig& cfg);
/// The one-parameter family swept by bifurcate (kick: parameter is C K).
MapFamily selected_family(const RunConfig& cfg);

double default_x0(const RunConfig& cfg);
Interval default_search_range(const RunConfig& cfg);

/// Reads DDMAP_THREADS; 0 when unset or invalid.
int threads_from_env();

}  // namespace ddmap::cli

#include "config.hpp"

#include <cstdlib>

#include "ddmap/format.hpp"

namespace ddmap::cli {

bool is_kick(const RunConfig& cfg) { return cfg.map == "kick"; }

EnergyVariant variant_of(const RunConfig& cfg) {
    return parse_energy_variant(cfg.variant.c_str());
}

KickParams kick_params_fraction(const RunConfig& cfg, double c_times_K) {
    const double omega = cfg.omega.value_or(KickParams::default_omega);
    const double nu = cfg.nu.value_or(KickParams::default_nu());
    return KickParams(c_times_K / kick_strength(omega, nu), omega, nu);
}

KickParams kick_params(const RunConfig& cfg) {
    if (cfg.c_frac && cfg.c) {
        throw ConfigError("give either --c-frac or --c, not both");
    }
    if (cfg.c) {
        return KickParams(*cfg.c, cfg.omega.value_or(KickParams::default_omega),
                          cfg.nu.value_or(KickParams::default_nu()));
    }
    if (!cfg.c_frac) {
        throw ConfigError("the kick map needs --c-frac a/b (C = a/(bK)) or --c");
    }
    return kick_params_fraction(cfg, parse_fraction(*cfg.c_frac));
}

ScalarMap selected_map(const RunConfig& cfg) {
    if (is_kick(cfg)) {
        if (cfg.domain == "velocity") {
            return kick_velocity_map(kick_params(cfg));
        }
        if (cfg.domain != "energy") {
            throw ConfigError("--domain must be energy or velocity");
        }
        return kick_energy_map(kick_params(cfg), variant_of(cfg));
    }
    if (cfg.map == "logistic") {
        return logistic_map(LogisticParams(cfg.r));
    }
    if (cfg.map == "two-step-logistic") {
        return two_step_logistic_map(LogisticParams(cfg.r));
    }
    throw ConfigError("unknown map '" + cfg.map + "'");
}

MapFamily selected_family(const RunConfig& cfg) {
    if (is_kick(cfg)) {
        const EnergyVariant variant = variant_of(cfg);
        const bool velocity = cfg.domain == "velocity";
        RunConfig copy = cfg;
        return MapFamily{
            [copy, variant, velocity](double c_times_K) {
                const KickParams p = kick_params_fraction(copy, c_times_K);
                return velocity ? kick_velocity_map(p) : kick_energy_map(p, variant);
            },
            velocity ? "kick-velocity" : std::string("kick-energy/") + to_string(variant),
        };
    }
    if (cfg.map == "logistic") {
        return logistic_family();
    }
    if (cfg.map == "two-step-logistic") {
        return two_step_logistic_family();
    }
    throw ConfigError("unknown map '" + cfg.map + "'");
}

double default_x0(const RunConfig& cfg) {
    if (cfg.x0) {
        return *cfg.x0;
    }
    if (cfg.subcommand == "bifurcate") {
        return is_kick(cfg) ? 1.0 : 0.5;
    }
    // 0.5 is mapped onto the origin by r = 4, so use a generic point instead.
    return is_kick(cfg) ? 1.0 : 0.2;
}

Interval default_search_range(const RunConfig& cfg) {
    if (cfg.search_range) {
        return parse_range(*cfg.search_range);
    }
    return is_kick(cfg) ? Interval{0.0, 50.0} : Interval{0.0, 1.0};
}

int threads_from_env() {
    const char* env = std::getenv("DDMAP_THREADS");
    if (env == nullptr) {
        return 0;
    }
    try {
        const double v = parse_number(env);
        return v >= 1.0 ? static_cast<int>(v) : 0;
    } catch (const std::exception&) {
        return 0;
    }
}

}  // namespace ddmap::cli

#include "app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "commands.hpp"
#include "config.hpp"
#include "ddmap/error.hpp"

namespace ddmap::cli {
namespace {

void add_map_options(CLI::App& sub, RunConfig& cfg) {
    sub.add_option("--map", cfg.map, "kick | logistic | two-step-logistic")
        ->check(CLI::IsMember({"kick", "logistic", "two-step-logistic"}));
    sub.add_option("--c-frac", cfg.c_frac, "damping factor as a/b, meaning C = a/(bK)");
    sub.add_option("--c", cfg.c, "absolute damping factor C");
    sub.add_option("--r", cfg.r, "logistic growth rate");
    sub.add_option("--omega", cfg.omega, "kick wavenumber (default 31/2)");
    sub.add_option("--nu", cfg.nu, "kick damping parameter (default omega^2/(8.4 pi^2))");
    sub.add_option("--variant", cfg.variant, "exact-square | paper-literal")
        ->check(CLI::IsMember({"exact-square", "paper-literal"}));
    sub.add_option("--domain", cfg.domain, "kick state: energy | velocity")
        ->check(CLI::IsMember({"energy", "velocity"}));
}

void add_output_options(CLI::App& sub, RunConfig& cfg) {
    sub.add_option("-o,--output", cfg.output, "write to this file instead of stdout");
}

using Command = std::function<void(const RunConfig&, std::ostream&)>;

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Damped-driven gain/loss maps: orbits, cobwebs, bifurcations, ingest"};
    app.require_subcommand(1);
    std::map<CLI::App*, std::pair<std::string, Command>> commands;

    auto* simulate = app.add_subcommand("simulate", "iterate a map and write n,value CSV");
    add_map_options(*simulate, cfg);
    simulate->add_option("--x0", cfg.x0, "initial value");
    simulate->add_option("--n", cfg.n, "last iterate index");
    simulate->add_option("--transient", cfg.transient, "iterates to discard");
    add_output_options(*simulate, cfg);
    commands[simulate] = {"simulate", cmd_simulate};

    auto* cobweb = app.add_subcommand("cobweb", "cobweb trace as SVG or segment CSV");
    add_map_options(*cobweb, cfg);
    cobweb->add_option("--x0", cfg.x0, "initial state");
    cobweb->add_option("--steps", cfg.steps, "cycles to trace");
    cobweb->add_flag("--one-step", cfg.one_step, "kick: plot the composed energy map instead");
    cobweb->add_option("--format", cfg.format, "svg | csv")->check(CLI::IsMember({"svg", "csv"}));
    cobweb->add_flag("--no-axis-values", cfg.no_axis_values, "omit tick values");
    add_output_options(*cobweb, cfg);
    commands[cobweb] = {"cobweb", cmd_cobweb};

    auto* bifurcate = app.add_subcommand("bifurcate", "bifurcation sweep as CSV (+ SVG)");
    add_map_options(*bifurcate, cfg);
    bifurcate->add_option("--range", cfg.range, "parameter range lo:hi (kick: units of 1/K)");
    bifurcate->add_option("--grid", cfg.grid, "grid points");
    bifurcate->add_option("--x0", cfg.x0, "initial state");
    bifurcate->add_option("--transient", cfg.sweep_transient, "iterates discarded per parameter");
    bifurcate->add_option("--keep", cfg.keep, "samples kept per parameter");
    bifurcate->add_option("--p-max", cfg.p_max, "largest period searched");
    bifurcate->add_option("--tol", cfg.tol, "relative period tolerance");
    bifurcate->add_flag("--cold", cfg.cold, "restart every parameter from x0 (parallel)");
    bifurcate->add_option("--svg", cfg.svg_path, "also write the diagram as SVG");
    bifurcate->add_flag("--no-axis-values", cfg.no_axis_values, "omit tick values");
    add_output_options(*bifurcate, cfg);
    commands[bifurcate] = {"bifurcate", cmd_bifurcate};

    auto* fixed = app.add_subcommand("fixed-points", "fixed points of the cycle map as JSON");
    add_map_options(*fixed, cfg);
    fixed->add_option("--search-range", cfg.search_range, "lo:hi (default 0:50 kick, 0:1 logistic)");
    fixed->add_option("--grid-n", cfg.grid_n, "bracketing grid size");
    add_output_options(*fixed, cfg);
    commands[fixed] = {"fixed-points", cmd_fixed_points};

    auto* three = app.add_subcommand("three-cycles", "period-3 orbits as JSON");
    add_map_options(*three, cfg);
    three->add_option("--search-range", cfg.search_range, "lo:hi (default 0:1)");
    three->add_option("--grid-n", cfg.grid_n, "bracketing grid size");
    add_output_options(*three, cfg);
    commands[three] = {"three-cycles", cmd_three_cycles};

    auto* lyap = app.add_subcommand("lyapunov", "Lyapunov exponent of an orbit");
    add_map_options(*lyap, cfg);
    lyap->add_option("--x0", cfg.x0, "initial value");
    auto* lyap_n = lyap->add_option("--n", cfg.n, "iterates averaged (default 1000000)");
    lyap->add_option("--transient", cfg.lyapunov_transient, "iterates discarded (default 1000)");
    add_output_options(*lyap, cfg);
    commands[lyap] = {"lyapunov", cmd_lyapunov};

    auto* traj = app.add_subcommand("trajectory", "walker path on the annulus");
    add_map_options(*traj, cfg);
    traj->add_option("--v0", cfg.v0, "initial signed velocity");
    traj->add_option("--impacts", cfg.impacts, "number of impacts");
    traj->add_option("--L", cfg.circumference, "annulus circumference");
    traj->add_option("--dt", cfg.dt, "time per impact");
    traj->add_flag("--stats", cfg.stats, "print path statistics and regime as JSON");
    traj->add_option("--bin-width", cfg.bin_width, "displacement histogram bin width");
    traj->add_option("--skip", cfg.skip, "impacts excluded from statistics");
    add_output_options(*traj, cfg);
    commands[traj] = {"trajectory", cmd_trajectory};

    auto* ingest = app.add_subcommand("ingest", "impact CSV to energy series and fitted curves");
    ingest->add_option("--input", cfg.input, "CSV path, '-' for stdin");
    ingest->add_option("--loss-kind", cfg.loss_kind,
                       "linear-through-origin | polynomial | piecewise-linear");
    ingest->add_option("--gain-kind", cfg.gain_kind,
                       "linear-through-origin | polynomial | piecewise-linear");
    ingest->add_option("--bins", cfg.bins, "piecewise-linear bins");
    ingest->add_option("--degree", cfg.degree, "polynomial degree (<= 6)");
    ingest->add_option("--svg", cfg.svg_path, "also write an empirical cobweb SVG");
    ingest->add_option("--x0", cfg.x0, "cobweb start (pre-impact energy)");
    ingest->add_option("--steps", cfg.steps, "cobweb cycles");
    ingest->add_flag("--no-axis-values", cfg.no_axis_values, "omit tick values");
    add_output_options(*ingest, cfg);
    commands[ingest] = {"ingest", cmd_ingest};

    auto* synth = app.add_subcommand("synth-impacts", "impact CSV generated by the kick model");
    add_map_options(*synth, cfg);
    synth->add_option("--v0", cfg.synth_v0, "initial velocity (default 0.15)");
    synth->add_option("--count", cfg.count, "number of impacts");
    synth->add_option("--noise", cfg.noise, "relative Gaussian noise on speeds");
    synth->add_option("--seed", cfg.seed, "noise seed");
    add_output_options(*synth, cfg);
    commands[synth] = {"synth-impacts", cmd_synth_impacts};

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitBadConfig;
    }

    if (lyap->parsed() && lyap_n->count() == 0) {
        cfg.n = 1000000;
    }
    cfg.threads = threads_from_env();
    try {
        for (auto& [sub, entry] : commands) {
            if (!sub->parsed()) {
                continue;
            }
            cfg.subcommand = entry.first;
            if (cfg.output.empty()) {
                entry.second(cfg, out);
            } else {
                // Build in memory so a failed run leaves no partial file.
                std::ostringstream buffer;
                entry.second(cfg, buffer);
                std::ofstream file(cfg.output, std::ios::binary);
                if (!file) {
                    throw ConfigError("cannot open '" + cfg.output + "' for writing");
                }
                file << buffer.str();
            }
        }
    } catch (const DivergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDivergence;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadConfig;
    }
    return kExitOk;
}

}  // namespace ddmap::cli

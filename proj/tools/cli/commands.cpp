#include "commands.hpp"

#include <fstream>
#include <map>
#include <iostream>
#include <string>

#include <json.hpp>

#include "ddmap/cobweb.hpp"
#include "ddmap/error.hpp"
#include "ddmap/fixed_points.hpp"
#include "ddmap/format.hpp"
#include "ddmap/ingest.hpp"
#include "ddmap/lyapunov.hpp"
#include "ddmap/orbit.hpp"
#include "ddmap/period.hpp"
#include "ddmap/svg.hpp"
#include "ddmap/sweep.hpp"
#include "ddmap/trajectory.hpp"

namespace ddmap::cli {
namespace {

std::string format_or(const RunConfig& cfg, const char* fallback) {
    return cfg.format.empty() ? fallback : cfg.format;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw ConfigError("cannot open '" + path + "' for writing");
    }
    f << text;
}

std::string period_color(int period) {
    switch (period) {
        case 1:
            return "#000000";
        case 2:
            return "#1f4fd1";
        case 3:
            return "#d62728";
        case 4:
            return "#d4a017";
        case 8:
            return "#7b2fa8";
        case 0:
            return "#9a9a9a";
        case kDivergedPeriod:
            return "#ff00ff";
        default:
            return "#2ca02c";
    }
}

std::string render_cobweb(const CobwebTrace& trace, bool axis_values, const std::string& title) {
    SvgPlot plot;
    plot.set_title(title);
    plot.show_axis_values(axis_values);
    if (trace.two_step) {
        plot.set_axis_labels("E gain (loss input)", "E loss (gain input)");
        plot.add_polyline(trace.secondary_curve, {"#1f4fd1", 1.5, "6 4", 1.0});
        plot.add_polyline(trace.primary_curve, {"#d62728", 2.5, "", 1.0});
    } else {
        plot.set_axis_labels("E_n", "E_n+1");
        plot.add_polyline(trace.secondary_curve, {"#1f4fd1", 1.5, "6 4", 1.0});
        plot.add_polyline(trace.primary_curve, {"#d62728", 2.5, "", 1.0});
    }
    plot.add_segments(trace.segments, {"#222222", 0.6, "", 0.8});
    return plot.render();
}

}  // namespace

void cmd_simulate(const RunConfig& cfg, std::ostream& out) {
    const ScalarMap map = selected_map(cfg);
    const Orbit orbit = iterate(map, default_x0(cfg), cfg.n, cfg.transient);
    out << "n,value\n";
    for (std::size_t i = 0; i < orbit.samples.size(); ++i) {
        out << (orbit.transient_len + 1 + i) << ',' << format_double(orbit.samples[i]) << '\n';
    }
}

void cmd_cobweb(const RunConfig& cfg, std::ostream& out) {
    CobwebTrace trace;
    std::string title;
    const double x0 = default_x0(cfg);
    if (is_kick(cfg) && !cfg.one_step) {
        const KickParams p = kick_params(cfg);
        trace = cobweb_trace(kick_system(p, variant_of(cfg)), x0, cfg.steps);
        title = "kick gain/loss cobweb, C K = " + format_fixed(p.C() * p.K(), 4);
    } else if (cfg.map == "two-step-logistic") {
        trace = cobweb_trace(logistic_system(LogisticParams(cfg.r)), x0, cfg.steps);
        title = "two-step logistic cobweb, r = " + format_double(cfg.r);
    } else {
        const ScalarMap map = selected_map(cfg);
        trace = cobweb_trace(map, x0, cfg.steps);
        title = map.id + " cobweb";
    }
    const std::string fmt = format_or(cfg, "svg");
    if (fmt == "svg") {
        out << render_cobweb(trace, !cfg.no_axis_values, title);
    } else if (fmt == "csv") {
        out << "step,kind,x0,y0,x1,y1\n";
        for (std::size_t i = 0; i < trace.segments.size(); ++i) {
            const Segment& s = trace.segments[i];
            out << (i / 2 + 1) << ',' << to_string(s.kind) << ',' << format_double(s.from.x) << ','
                << format_double(s.from.y) << ',' << format_double(s.to.x) << ','
                << format_double(s.to.y) << '\n';
        }
    } else {
        throw ConfigError("cobweb: --format must be svg or csv");
    }
}

void cmd_bifurcate(const RunConfig& cfg, std::ostream& out) {
    Interval range = parse_range(cfg.range.value_or(is_kick(cfg) ? "0:1" : "2.5:4"));
    SweepOptions opts;
    opts.x0 = default_x0(cfg);
    opts.transient = cfg.sweep_transient;
    opts.keep = cfg.keep;
    opts.p_max = cfg.p_max;
    opts.tol = cfg.tol;
    opts.warm_start = !cfg.cold;
    opts.threads = cfg.threads;
    // C = 0 is not a valid damping factor; sweep (0, hi] instead.
    if (is_kick(cfg) && range.lo <= 0.0) {
        range.lo = 0.0;
        opts.include_lower = false;
    }
    const BifurcationDiagram d = bifurcation_sweep(selected_family(cfg), range, cfg.grid, opts);

    out << "param,sample_index,value,period\n";
    for (std::size_t i = 0; i < d.param_grid.size(); ++i) {
        const std::string param = format_double(d.param_grid[i]);
        const auto row = d.samples_at(i);
        for (std::size_t j = 0; j < row.size(); ++j) {
            out << param << ',' << j << ',' << format_double(row[j]) << ',' << d.periods[i] << '\n';
        }
    }

    if (cfg.svg_path) {
        SvgPlot plot(900, 560);
        plot.set_title("bifurcation diagram (" + selected_family(cfg).id + ")");
        plot.set_axis_labels(is_kick(cfg) ? "C K" : "r", "attractor");
        plot.show_axis_values(!cfg.no_axis_values);
        std::map<int, std::vector<Point>> by_period;
        for (std::size_t i = 0; i < d.param_grid.size(); ++i) {
            for (double v : d.samples_at(i)) {
                by_period[d.periods[i]].push_back({d.param_grid[i], v});
            }
        }
        for (const auto& [period, pts] : by_period) {
            plot.add_points(pts, {period_color(period), 1.0, "", 1.0});
        }
        write_file(*cfg.svg_path, plot.render());
    }
}

void cmd_fixed_points(const RunConfig& cfg, std::ostream& out) {
    const FixedPointSet set = fixed_points(selected_map(cfg), default_search_range(cfg), cfg.grid_n);
    nlohmann::json arr = nlohmann::json::array();
    for (const FixedPoint& p : set.points) {
        arr.push_back({{"E", p.value}, {"stability", to_string(p.stability)},
                       {"multiplier", p.multiplier}});
    }
    out << arr.dump(2) << '\n';
}

void cmd_three_cycles(const RunConfig& cfg, std::ostream& out) {
    const Interval domain =
        cfg.search_range ? parse_range(*cfg.search_range)
                         : (is_kick(cfg) ? Interval{0.0, 1.0} : Interval{0.0, 1.0});
    nlohmann::json arr = nlohmann::json::array();
    for (const ThreeCycle& c : find_three_cycle(selected_map(cfg), domain, cfg.grid_n)) {
        arr.push_back({{"points", c.points},
                       {"multiplier", c.multiplier},
                       {"stability", to_string(c.stability)}});
    }
    out << arr.dump(2) << '\n';
}

void cmd_lyapunov(const RunConfig& cfg, std::ostream& out) {
    const std::size_t transient = cfg.lyapunov_transient.value_or(1000);
    const LyapunovEstimate est = lyapunov(selected_map(cfg), default_x0(cfg), transient + cfg.n, transient);
    out << format_double(est.exponent) << '\n';
    if (est.floored > 0) {
        std::cerr << "warning: " << est.floored
                  << " iterates had |f'| < 1e-300 and were floored\n";
    }
}

void cmd_trajectory(const RunConfig& cfg, std::ostream& out) {
    const KickParams p = kick_params(cfg);
    const WalkerPath path = simulate_walk(p, cfg.v0, cfg.impacts, cfg.circumference, cfg.dt);
    if (!cfg.stats) {
        out << "n,x_wrapped,x_unwrapped,v\n";
        for (std::size_t i = 0; i < path.size(); ++i) {
            out << (i + 1) << ',' << format_double(path.positions[i]) << ','
                << format_double(path.unwrapped[i]) << ',' << format_double(path.velocities[i])
                << '\n';
        }
        return;
    }
    const PathStats stats = path_stats(path, cfg.bin_width, cfg.skip);
    const WalkClassification regime = classify_walk(p, cfg.v0);
    nlohmann::json j;
    j["mean_speed"] = stats.mean_speed;
    j["direction_switch_count"] = stats.direction_switch_count;
    j["histogram"] = {{"bin_width", stats.displacement.bin_width},
                      {"counts", stats.displacement.counts}};
    j["regime"] = to_string(regime.regime);
    j["period"] = regime.period;
    j["lyapunov"] = regime.lyapunov;
    out << j.dump(2) << '\n';
}

void cmd_ingest(const RunConfig& cfg, std::ostream& out) {
    std::vector<ImpactRecord> records;
    if (cfg.input == "-") {
        records = parse_impacts(std::cin);
    } else {
        std::ifstream in(cfg.input, std::ios::binary);
        if (!in) {
            throw ConfigError("cannot open '" + cfg.input + "'");
        }
        records = parse_impacts(in);
    }
    const EnergySeries series = energy_series(records);
    const CurveFits fits =
        fit_curves(series, {parse_curve_kind(cfg.loss_kind), cfg.degree, cfg.bins},
                   {parse_curve_kind(cfg.gain_kind), cfg.degree, cfg.bins});
    out << ingest_report(series, fits).dump(2) << '\n';

    if (cfg.svg_path) {
        const GainLossSystem system = empirical_system(fits);
        const double x0 = cfg.x0.value_or(series.pre_impact.front());
        const CobwebTrace trace = cobweb_trace(system, x0, cfg.steps);
        SvgPlot plot;
        plot.set_title("empirical gain/loss cobweb");
        plot.set_axis_labels("E pre-impact", "E post-impact");
        plot.show_axis_values(!cfg.no_axis_values);
        plot.add_polyline(trace.secondary_curve, {"#1f4fd1", 1.5, "6 4", 1.0});
        plot.add_polyline(trace.primary_curve, {"#d62728", 2.5, "", 1.0});
        std::vector<Point> measured;
        for (std::size_t i = 0; i < series.pre_impact.size(); ++i) {
            measured.push_back({series.pre_impact[i], series.post_impact[i]});
        }
        plot.add_points(measured, {"#2ca02c", 1.0, "", 1.0});
        plot.add_segments(trace.segments, {"#222222", 0.6, "", 0.8});
        write_file(*cfg.svg_path, plot.render());
    }
}

void cmd_synth_impacts(const RunConfig& cfg, std::ostream& out) {
    SyntheticImpactOptions opts;
    opts.v0 = cfg.synth_v0.value_or(opts.v0);
    opts.count = cfg.count;
    opts.noise = cfg.noise;
    opts.seed = cfg.seed;
    write_impacts(out, synthesize_impacts(kick_params(cfg), opts));
}

}  // namespace ddmap::cli

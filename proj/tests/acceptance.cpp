// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "ddmap/fixed_points.hpp"
#include "ddmap/ingest.hpp"
#include "ddmap/logistic.hpp"
#include "ddmap/lyapunov.hpp"
#include "ddmap/period.hpp"
#include "ddmap/sweep.hpp"
#include "ddmap/trajectory.hpp"
#include "support.hpp"

#ifndef DDMAP_CLI_PATH
#error "DDMAP_CLI_PATH must name the ddmap executable"
#endif

using namespace ddmap;

namespace {

// Tolerances and limits, fixed here so every run judges the same way.
constexpr double kEquivalenceTol = 1e-12;
constexpr double kLogisticFixedTol = 1e-9;
constexpr double kTwoCycleTol = 1e-4;
constexpr double kLyapunovTol = 0.01;
constexpr double kConjugacyTol = 1e-12;
constexpr double kSlopeTol = 1e-6;
constexpr double kSteadySpeedTol = 1e-9;
constexpr std::size_t kTransient = 5000;
constexpr std::size_t kKeep = 256;

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Report {
public:
    void note(bool ok, const std::string& what) {
        outcome_.pass = outcome_.pass && ok;
        if (!outcome_.detail.empty()) {
            outcome_.detail += "; ";
        }
        outcome_.detail += (ok ? "" : "!! ") + what;
    }
    Outcome take() { return std::move(outcome_); }

private:
    Outcome outcome_;
};

std::string fmt(const char* pattern, double value) {
    std::array<char, 128> buf{};
    std::snprintf(buf.data(), buf.size(), pattern, value);
    return buf.data();
}

KickParams at(double cK) { return KickParams::paper_defaults_fraction(cK); }

int period_of(const ScalarMap& map, double x0) {
    return detect_period(iterate(map, x0, kTransient + kKeep, kTransient));
}

Outcome logistic_equivalence() {
    double worst = 0.0;
    for (double r : {2.5, 3.3, 4.0}) {
        const LogisticParams p(r);
        for (int i = 0; i <= 1000; ++i) {
            const double E = i / 1000.0;
            worst = std::max(worst, test::rel_err(logistic_loss(logistic_gain(E, p), p), logistic_step(E, p)));
        }
    }
    Report rep;
    rep.note(worst < kEquivalenceTol, fmt("max rel err %.2e", worst));
    return rep.take();
}

Outcome logistic_regimes() {
    Report rep;
    const Orbit sink = iterate(logistic_map(LogisticParams(2.5)), 0.2, kTransient + kKeep, kTransient);
    double sink_err = 0.0;
    for (double x : sink.samples) {
        sink_err = std::max(sink_err, std::abs(x - 0.6));
    }
    rep.note(detect_period(sink) == 1 && sink_err < kLogisticFixedTol,
             "r=2.5 period " + std::to_string(detect_period(sink)) + fmt(" |x-0.6| %.1e", sink_err));

    const Orbit two = iterate(logistic_map(LogisticParams(3.3)), 0.2, kTransient + kKeep, kTransient);
    const auto [mn, mx] = std::minmax_element(two.samples.begin(), two.samples.end());
    const auto [lo, hi] = test::logistic_two_cycle(3.3);
    const bool two_ok = detect_period(two) == 2 && std::abs(*mn - 0.4794) < kTwoCycleTol &&
                        std::abs(*mx - 0.8236) < kTwoCycleTol && std::abs(*mn - lo) < kLogisticFixedTol &&
                        std::abs(*mx - hi) < kLogisticFixedTol;
    rep.note(two_ok, "r=3.3 period " + std::to_string(detect_period(two)) + fmt(" {%.6f,", *mn) +
                         fmt(" %.6f}", *mx));

    const ScalarMap full = logistic_map(LogisticParams(4.0));
    const int p4 = period_of(full, 0.2);
    const double lam = lyapunov(full, 0.2, 1000000, 1000).exponent;
    rep.note(p4 == 0 && std::abs(lam - std::numbers::ln2) < kLyapunovTol,
             "r=4 period " + std::to_string(p4) + fmt(" lyapunov %.4f", lam));
    return rep.take();
}

Outcome conjugacy() {
    double worst = 0.0;
    for (double cK : {0.05, 1.0 / 6.0, 1.0}) {
        const KickParams p = at(cK);
        for (double v : test::random_uniform(10000, -2.0 * std::numbers::pi, 2.0 * std::numbers::pi, 31)) {
            const double w = kick_velocity_step(v, p);
            worst = std::max(worst, test::rel_err(w * w, energy_cycle(v * v, p)));
        }
    }
    Report rep;
    rep.note(worst < kConjugacyTol, fmt("max rel err %.2e", worst));
    return rep.take();
}

Outcome fixed_point_counts() {
    Report rep;
    const auto count = [](double cK) {
        return fixed_points(kick_energy_map(at(cK)), {0.0, 50.0}, 50001).nontrivial_count();
    };
    const std::size_t c20 = count(0.05);
    const std::size_t c4 = count(0.25);
    const std::size_t c1 = count(1.0);
    rep.note(c20 == 0, "1/20K: " + std::to_string(c20));
    rep.note(c4 == 1, "1/4K: " + std::to_string(c4));
    rep.note(c1 >= 2, "1/K: " + std::to_string(c1));
    return rep.take();
}

Outcome route_to_chaos() {
    Report rep;
    const ScalarMap m7 = kick_energy_map(at(1.0 / 7.0));
    const int p7 = period_of(m7, 1.0);
    // The attractor at 1/7K should be a sink found by the fixed-point search.
    const double settled = advance(m7, 1.0, kTransient);
    bool is_sink = false;
    for (const auto& fp : fixed_points(m7, {0.0, 50.0}, 50001).points) {
        is_sink = is_sink || (fp.stability == Stability::sink && std::abs(fp.value - settled) < 1e-6);
    }
    rep.note(p7 == 1 && is_sink, "1/7K period " + std::to_string(p7) + (is_sink ? " (sink)" : " (no sink)"));
    const int p6 = period_of(kick_energy_map(at(1.0 / 6.0)), 1.0);
    rep.note(p6 == 2, "1/6K period " + std::to_string(p6));
    const int p5 = period_of(kick_energy_map(at(0.2)), 1.0);
    rep.note(p5 == 0, "1/5K period " + std::to_string(p5));
    const ScalarMap m1 = kick_energy_map(at(1.0));
    const int p1 = period_of(m1, 1.0);
    const double lam = lyapunov(m1, 1.0, 1000000, kTransient).exponent;
    rep.note(p1 == 0 && lam > kChaosThreshold, "1/K period " + std::to_string(p1) + fmt(" lyapunov %.3f", lam));
    return rep.take();
}

Outcome bifurcation() {
    Report rep;
    SweepOptions opts;
    opts.include_lower = false;
    const BifurcationDiagram full = bifurcation_sweep(kick_energy_family(), {0.0, 1.0}, 2000, opts);
    const std::vector<int> ladder = test::period_ladder(full.periods);
    std::string text;
    for (int p : ladder) {
        text += (text.empty() ? "" : "->") + std::to_string(p);
    }
    const bool ladder_ok = ladder.size() >= 4 && ladder[0] == 1 && ladder[1] == 2 && ladder[2] == 4 &&
                           ladder[3] == 8 && std::is_sorted(ladder.begin(), ladder.end());
    rep.note(ladder_ok, "ladder " + text);
    // Grid point k sits at C K = (k + 1) / 2000.
    const int at_sixth = full.periods[static_cast<std::size_t>(std::lround(2000.0 / 6.0)) - 1];
    rep.note(at_sixth == 2, "period at 1/6K " + std::to_string(at_sixth));
    rep.note(full.periods.back() == 0, "period at 1/K " + std::to_string(full.periods.back()));

    opts.include_lower = true;
    const BifurcationDiagram zoom = bifurcation_sweep(kick_energy_family(), {0.14, 0.2}, 2000, opts);
    const auto threes = std::count(zoom.periods.begin(), zoom.periods.end(), 3);
    double first_three = 0.0;
    for (std::size_t i = 0; i < zoom.periods.size(); ++i) {
        if (zoom.periods[i] == 3) {
            first_three = zoom.param_grid[i];
            break;
        }
    }
    rep.note(threes > 0, std::to_string(threes) + " zoom points with period 3" +
                             (threes > 0 ? fmt(" from C K = %.5f", first_three) : ""));
    return rep.take();
}

Outcome trajectories() {
    Report rep;
    const std::size_t skip = 2000;
    const WalkerPath steady = simulate_walk(at(0.1), 1.0, 10000);
    const PathStats ss = path_stats(steady, 0.01, skip);
    double spread = 0.0;
    for (std::size_t i = skip; i < steady.size(); ++i) {
        spread = std::max(spread, std::abs(std::abs(steady.velocities[i]) - std::abs(steady.velocities[skip])));
    }
    rep.note(ss.direction_switch_count == 0 && spread < kSteadySpeedTol,
             "1/10K switches " + std::to_string(ss.direction_switch_count) + fmt(" speed spread %.1e", spread));
    const std::size_t bins = path_stats(simulate_walk(at(1.0 / 6.0), 1.0, 10000), 0.01, skip)
                                 .displacement.occupied_bins();
    rep.note(bins == 2, "1/6K occupied bins " + std::to_string(bins));
    const std::size_t switches = path_stats(simulate_walk(at(0.5), 1.0, 10000), 0.01).direction_switch_count;
    rep.note(switches > 0, "1/2K switches " + std::to_string(switches));
    return rep.take();
}

Outcome ingest_round_trip() {
    Report rep;
    const KickParams p = at(0.1);
    const CurveFits fits = fit_curves(energy_series(synthesize_impacts(p)));
    const double err = test::rel_err(fits.loss.coefficients.front(), p.C() * p.C());
    rep.note(err < kSlopeTol, fmt("slope rel err %.1e", err));
    const std::size_t empirical = empirical_fixed_points(fits).nontrivial_count();
    const std::size_t analytic =
        fixed_points(kick_energy_map(p), empirical_domain(fits), 20001).nontrivial_count();
    rep.note(empirical == analytic, "fixed points empirical " + std::to_string(empirical) + " analytic " +
                                        std::to_string(analytic));
    return rep.take();
}

std::string capture(const std::string& command, int& status) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        status = -1;
        return out;
    }
    std::array<char, 65536> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), got);
    }
    status = pclose(pipe);
    return out;
}

Outcome determinism() {
    Report rep;
    const std::string cli = DDMAP_CLI_PATH;
    struct Invocation {
        std::string label;
        std::string args;
    };
    const std::vector<Invocation> runs{
        {"cold sweep", "bifurcate --range 0:1 --grid 400 --cold"},
        {"warm sweep", "bifurcate --range 7/50:1/5 --grid 200 --svg /dev/null"},
        {"cobweb", "cobweb --c-frac 1/1 --steps 300"},
        {"noisy impacts", "synth-impacts --c-frac 1/2 --count 500 --noise 0.01 --seed 42"},
        {"fixed points", "fixed-points --c-frac 1/1"},
        {"walk", "trajectory --c-frac 1/2 --impacts 2000"},
    };
    for (const auto& run : runs) {
        int s1 = 0;
        int s2 = 0;
        int s3 = 0;
        const std::string a = capture("DDMAP_THREADS=4 " + cli + " " + run.args, s1);
        const std::string b = capture("DDMAP_THREADS=4 " + cli + " " + run.args, s2);
        const std::string c = capture("DDMAP_THREADS=1 " + cli + " " + run.args, s3);
        const bool ok = s1 == 0 && s2 == 0 && s3 == 0 && !a.empty() && a == b && a == c;
        rep.note(ok, run.label + " " + std::to_string(a.size()) + " bytes" + (ok ? "" : " differ"));
    }
    return rep.take();
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> check;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "two-step/one-step logistic equivalence", 1.0, logistic_equivalence},
        {2, "logistic regimes", 10.0, logistic_regimes},
        {3, "energy/velocity conjugacy", 1.0, conjugacy},
        {4, "fixed-point counts", 5.0, fixed_point_counts},
        {5, "route to chaos", 30.0, route_to_chaos},
        {6, "bifurcation diagram", 300.0, bifurcation},
        {7, "trajectory regimes", 10.0, trajectories},
        {8, "ingest round trip", 5.0, ingest_round_trip},
        {9, "CLI determinism", 300.0, determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.check();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.limit_seconds;
        const bool pass = out.pass && in_time;
        failures += pass ? 0 : 1;
        std::printf("%s  [%d] %-40s %7.2f s (limit %g s%s)  %s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    secs, c.limit_seconds, in_time ? "" : ", exceeded", out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}

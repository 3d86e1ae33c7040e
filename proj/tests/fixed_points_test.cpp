#include <doctest.h>

#include <cmath>

#include "ddmap/error.hpp"
#include "ddmap/fixed_points.hpp"
#include "ddmap/orbit.hpp"
#include "ddmap/roots.hpp"
#include "support.hpp"

using namespace ddmap;

namespace {

const Interval kKickRange{0.0, 50.0};

// Independent count: sign changes of f(E) - E on a fine grid, skipping the origin.
std::size_t brute_force_crossings(const ScalarMap& map, Interval dom, std::size_t n) {
    std::size_t count = 0;
    double prev = 0.0;
    bool have_prev = false;
    for (std::size_t i = 1; i < n; ++i) {
        const double x = dom.lo + dom.width() * static_cast<double>(i) / static_cast<double>(n - 1);
        const double g = map.f(x) - x;
        if (have_prev && ((prev < 0.0) != (g < 0.0))) {
            ++count;
        }
        prev = g;
        have_prev = true;
    }
    return count;
}

}  // namespace

TEST_CASE("residual sampling is identical in parallel") {
    const ScalarMap map = kick_energy_map(KickParams::paper_defaults_fraction(1.0));
    const ScalarFn g = [&map](double x) { return map.f(x) - x; };
    const auto grid = uniform_grid({0.0, 50.0}, 100001);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() == 50.0);
    CHECK(sample_residuals(g, grid) == sample_residuals_serial(g, grid));
}

TEST_CASE("scan_roots finds crossings and touches") {
    const auto roots = scan_roots([](double x) { return (x - 0.25) * (x - 0.7); }, {0.0, 1.0}, 1001);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].x == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(roots[1].x == doctest::Approx(0.7).epsilon(1e-12));
    CHECK_FALSE(roots[0].tangential);

    // A double root between grid nodes leaves no sign change.
    const double t = 0.31234567;
    const auto touch = scan_roots([t](double x) { return (x - t) * (x - t); }, {0.0, 1.0}, 1000);
    REQUIRE(touch.size() == 1);
    CHECK(touch[0].tangential);
    CHECK(std::abs(touch[0].x - t) < 1e-5);

    RootScanOptions no_touch;
    no_touch.detect_tangencies = false;
    CHECK(scan_roots([t](double x) { return (x - t) * (x - t); }, {0.0, 1.0}, 1000, no_touch).empty());
}

TEST_CASE("multiplier classification") {
    CHECK(classify_multiplier(0.5) == Stability::sink);
    CHECK(classify_multiplier(-0.999) == Stability::sink);
    CHECK(classify_multiplier(1.5) == Stability::source);
    CHECK(classify_multiplier(-1.0 - 1e-12) == Stability::nonhyperbolic);
    CHECK(std::string(to_string(Stability::nonhyperbolic)) == "nonhyperbolic");
}

TEST_CASE("kick fixed-point counts by damping") {
    struct Case {
        double cK;
        std::size_t min_count;
        std::size_t max_count;
    };
    for (const Case c : {Case{0.05, 0, 0}, Case{0.25, 1, 1}, Case{1.0, 2, 1000}}) {
        const ScalarMap map = kick_energy_map(KickParams::paper_defaults_fraction(c.cK));
        const FixedPointSet set = fixed_points(map, kKickRange, 50001);
        CAPTURE(c.cK);
        CHECK(set.nontrivial_count() >= c.min_count);
        CHECK(set.nontrivial_count() <= c.max_count);
        CHECK(set.points.front().value == 0.0);
        CHECK(set.nontrivial_count() == brute_force_crossings(map, kKickRange, 400001));
        for (std::size_t i = 0; i < set.points.size(); ++i) {
            const double x = set.points[i].value;
            CHECK(std::abs(map.f(x) - x) < 1e-10);
            if (i > 0) {
                CHECK(x > set.points[i - 1].value + 1e-9);
            }
        }
    }
}

TEST_CASE("sinks attract nearby orbits") {
    for (double cK : {0.1, 1.0 / 7.0}) {
        const ScalarMap map = kick_energy_map(KickParams::paper_defaults_fraction(cK));
        const FixedPointSet set = fixed_points(map, kKickRange, 50001);
        std::size_t sinks = 0;
        for (const auto& fp : set.points) {
            if (fp.stability != Stability::sink || fp.value == 0.0) {
                continue;
            }
            ++sinks;
            CHECK(std::abs(advance(map, fp.value + 1e-4, 10000) - fp.value) < 1e-6);
        }
        CHECK(sinks >= 1);
    }
}

TEST_CASE("multipliers match the analytic slope") {
    const ScalarMap map = kick_energy_map(KickParams::paper_defaults_fraction(1.0));
    for (const auto& fp : fixed_points(map, kKickRange, 50001).points) {
        CHECK(fp.multiplier == doctest::Approx(map.df(fp.value)).epsilon(1e-12));
    }
}

TEST_CASE("tangential fixed points are nonhyperbolic") {
    const ScalarMap touch{[](double x) { return x + (x - 0.4) * (x - 0.4); }, {}, false, "touch"};
    const FixedPointSet set = fixed_points(touch, {0.0, 1.0}, 1000);
    REQUIRE(set.points.size() == 1);
    CHECK(set.points[0].tangential);
    CHECK(set.points[0].stability == Stability::nonhyperbolic);
    CHECK(std::abs(touch.f(set.points[0].value) - set.points[0].value) < 1e-10);
}

TEST_CASE("fixed point preconditions") {
    const ScalarMap id = logistic_map(LogisticParams(2.5));
    CHECK_THROWS_AS(fixed_points(id, {1.0, 1.0}, 100), DomainError);
    CHECK_THROWS_AS(fixed_points(id, {0.0, 1.0}, 1), DomainError);
    const FixedPointSet set = fixed_points(id, {0.0, 1.0}, 1001);
    REQUIRE(set.points.size() == 2);
    CHECK(set.points[1].value == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(set.points[1].stability == Stability::sink);
    CHECK(set.points[1].multiplier == doctest::Approx(-0.5).epsilon(1e-9));
}

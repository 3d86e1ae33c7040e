#include <doctest.h>

#include <cmath>

#include "ddmap/cobweb.hpp"
#include "ddmap/error.hpp"
#include "ddmap/orbit.hpp"
#include "support.hpp"

using namespace ddmap;

namespace {

void check_connected(const CobwebTrace& trace) {
    for (std::size_t i = 1; i < trace.segments.size(); ++i) {
        const auto& a = trace.segments[i - 1];
        const auto& b = trace.segments[i];
        CHECK(a.to.x == b.from.x);
        CHECK(a.to.y == b.from.y);
        CHECK(a.kind != b.kind);
    }
}

}  // namespace

TEST_CASE("two-step logistic trace follows the composed orbit") {
    for (double r : {2.5, 3.3, 3.9}) {
        const LogisticParams p(r);
        const CobwebTrace trace = cobweb_trace(logistic_system(p), 0.2, 50);
        CHECK(trace.two_step);
        CHECK(trace.segments.size() == 100);
        check_connected(trace);
        const Orbit orbit = iterate(cycle_map(logistic_system(p)), 0.2, 50, 0);
        CHECK(trace.states() == orbit.samples);
        // Gain steps are horizontal, loss steps vertical.
        for (const auto& s : trace.segments) {
            if (s.kind == SegmentKind::gain_step) {
                CHECK(s.from.y == s.to.y);
            } else {
                CHECK(s.from.x == s.to.x);
            }
        }
    }
}

TEST_CASE("logistic trace spirals in or closes a rectangle") {
    const CobwebTrace sink = cobweb_trace(logistic_system(LogisticParams(2.5)), 0.2, 50);
    CHECK(std::abs(sink.states().back() - 0.6) < 1e-9);

    const CobwebTrace rect = cobweb_trace(logistic_system(LogisticParams(3.3)), 0.2, 400);
    const auto& s = rect.segments;
    const std::size_t n = s.size();
    // The last four segments revisit the same corners as the four before them.
    for (std::size_t k = n - 4; k < n; ++k) {
        CHECK(std::abs(s[k].to.x - s[k - 4].to.x) < 1e-9);
        CHECK(std::abs(s[k].to.y - s[k - 4].to.y) < 1e-9);
    }
    const auto [lo, hi] = test::logistic_two_cycle(3.3);
    const auto states = rect.states();
    const double a = std::min(states[states.size() - 1], states[states.size() - 2]);
    const double b = std::max(states[states.size() - 1], states[states.size() - 2]);
    CHECK(a == doctest::Approx(lo).epsilon(1e-9));
    CHECK(b == doctest::Approx(hi).epsilon(1e-9));
}

TEST_CASE("kick trace reads state from the gain step") {
    for (double cK : {1.0 / 7.0, 1.0 / 6.0, 1.0}) {
        const GainLossSystem sys = kick_system(KickParams::paper_defaults_fraction(cK));
        CHECK(sys.state == CycleState::post_gain);
        const CobwebTrace trace = cobweb_trace(sys, 1.0, 200);
        check_connected(trace);
        CHECK(trace.states() == iterate(cycle_map(sys), 1.0, 200, 0).samples);
        // The composed curves and the one-step formula round differently, so
        // only the first few cycles are compared before sensitivity takes over.
        const auto direct =
            iterate(kick_energy_map(KickParams::paper_defaults_fraction(cK)), 1.0, 5, 0).samples;
        for (std::size_t i = 0; i < direct.size(); ++i) {
            CHECK(test::rel_err(trace.states()[i], direct[i]) < 1e-9);
        }
        CHECK_FALSE(trace.primary_curve.empty());
        CHECK_FALSE(trace.secondary_curve.empty());
    }
}

TEST_CASE("one-step trace") {
    const ScalarMap map = logistic_map(LogisticParams(3.7));
    const CobwebTrace trace = cobweb_trace(map, 0.3, 30);
    CHECK_FALSE(trace.two_step);
    check_connected(trace);
    CHECK(trace.states() == iterate(map, 0.3, 30, 0).samples);
    CHECK(trace.segments.front().kind == SegmentKind::to_curve);
    CHECK(std::string(to_string(SegmentKind::to_diagonal)) == "to-diagonal");
    CHECK_THROWS_AS(cobweb_trace(map, 0.3, 0), DomainError);
}

#include <doctest.h>

#include <cmath>

#include "ddmap/error.hpp"
#include "ddmap/orbit.hpp"
#include "support.hpp"

using namespace ddmap;

TEST_CASE("logistic orbit settles on its fixed point") {
    const Orbit orbit = iterate(logistic_map(LogisticParams(2.5)), 0.2, 1000, 900);
    REQUIRE(orbit.samples.size() == 100);
    CHECK(orbit.transient_len == 900);
    for (double x : orbit.samples) {
        CHECK(std::abs(x - 0.6) < 1e-9);
    }
}

TEST_CASE("origin is invariant for the kick cycle") {
    for (double cK : {0.05, 0.5, 1.0}) {
        const Orbit orbit = iterate(kick_energy_map(KickParams::paper_defaults_fraction(cK)), 0.0, 50, 0);
        for (double x : orbit.samples) {
            CHECK(x == 0.0);
        }
    }
}

TEST_CASE("kick cycle alternates at one sixth") {
    const Orbit orbit = iterate(kick_energy_map(KickParams::paper_defaults_fraction(1.0 / 6.0)), 1.0,
                                6000, 5000);
    const auto& s = orbit.samples;
    CHECK(std::abs(s[0] - s[1]) > 1e-3);
    for (std::size_t k = 2; k < s.size(); ++k) {
        CHECK(std::abs(s[k] - s[k - 2]) < 1e-9);
    }
}

TEST_CASE("orbit preconditions and divergence") {
    const ScalarMap grow{[](double x) { return 3.0 * x + 1.0; }, {}, false, "affine"};
    try {
        iterate(grow, 1.0, 100, 0);
        FAIL("expected divergence");
    } catch (const DivergenceError& e) {
        // 3^k growth passes 1e6 at the 13th iterate.
        CHECK(e.index() == 13);
        CHECK(std::abs(e.value()) > kDivergenceBound);
    }
    CHECK_THROWS_AS(iterate(grow, 1.0, 5, 5), DomainError);
    CHECK_THROWS_AS(iterate(grow, std::nan(""), 5, 0), DomainError);
}

TEST_CASE("energy orbits are clamped at zero") {
    const ScalarMap dip{[](double x) { return x - 1.0; }, {}, true, "dip"};
    const Orbit orbit = iterate(dip, 0.5, 3, 0);
    CHECK(orbit.samples == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("advance matches iterate") {
    const ScalarMap map = logistic_map(LogisticParams(3.9));
    const Orbit orbit = iterate(map, 0.3, 40, 0);
    CHECK(advance(map, 0.3, 40) == orbit.samples.back());
}

#include <cmath>
#include <random>

#include "ddmap/error.hpp"
#include "ddmap/ingest.hpp"
#include "ddmap/orbit.hpp"

namespace ddmap {

std::vector<ImpactRecord> synthesize_impacts(const KickParams& p,
                                             const SyntheticImpactOptions& options) {
    if (options.count < 2) {
        throw DomainError("synthesize_impacts: need at least 2 impacts");
    }
    if (!(options.noise >= 0.0)) {
        throw DomainError("synthesize_impacts: noise must be nonnegative");
    }
    const ScalarMap map = kick_velocity_map(p);
    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    auto jitter = [&](double v) {
        return options.noise > 0.0 ? std::abs(v * (1.0 + options.noise * normal(rng))) : v;
    };

    std::vector<ImpactRecord> records;
    records.reserve(options.count);
    double v = options.v0;
    for (std::size_t n = 0; n < options.count; ++n) {
        if (n > 0) {
            v = orbit_step(map, v, n);
        }
        const double speed = std::abs(v);
        ImpactRecord rec;
        rec.index = static_cast<long long>(n) + 1;
        rec.v_in = jitter(speed);
        rec.v_out = jitter(p.C() * speed);
        records.push_back(rec);
    }
    return records;
}

}  // namespace ddmap

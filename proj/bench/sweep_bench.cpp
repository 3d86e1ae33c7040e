// Times the OpenMP cold-start sweep against the serial reference and checks
// that both produce the same diagram.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "ddmap/maps.hpp"
#include "ddmap/roots.hpp"
#include "ddmap/sweep.hpp"

namespace {

template <typename F>
double seconds(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const std::size_t grid = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 400;
    ddmap::SweepOptions opts;
    opts.warm_start = false;
    const ddmap::MapFamily family = ddmap::kick_energy_family();
    const ddmap::Interval range{0.0, 1.0};
    opts.include_lower = false;

    ddmap::BifurcationDiagram serial;
    ddmap::BifurcationDiagram parallel;
    const double t_serial =
        seconds([&] { serial = ddmap::bifurcation_sweep_serial(family, range, grid, opts); });
    const double t_parallel =
        seconds([&] { parallel = ddmap::bifurcation_sweep(family, range, grid, opts); });
    const bool same = serial.periods == parallel.periods &&
                      std::memcmp(serial.samples.data(), parallel.samples.data(),
                                  serial.samples.size() * sizeof(double)) == 0;

    std::printf("kick sweep, %zu params, %d threads\n", grid, omp_get_max_threads());
    std::printf("  serial   %8.3f s\n", t_serial);
    std::printf("  openmp   %8.3f s   speedup %.2fx\n", t_parallel, t_serial / t_parallel);
    std::printf("  identical: %s\n", same ? "yes" : "NO");

    const ddmap::ScalarMap map = ddmap::kick_energy_map(ddmap::KickParams::paper_defaults_fraction(1.0));
    const auto g = [&map](double x) { return map.f(map.f(map.f(x))) - x; };
    const auto pts = ddmap::uniform_grid({0.0, 1.0}, 2000001);
    std::vector<double> a;
    std::vector<double> b;
    const double r_serial = seconds([&] { a = ddmap::sample_residuals_serial(g, pts); });
    const double r_parallel = seconds([&] { b = ddmap::sample_residuals(g, pts); });
    std::printf("residual grid, %zu points\n", pts.size());
    std::printf("  serial   %8.3f s\n", r_serial);
    std::printf("  openmp   %8.3f s   speedup %.2fx\n", r_parallel, r_serial / r_parallel);
    std::printf("  identical: %s\n", a == b ? "yes" : "NO");
    return same && a == b ? 0 : 1;
}

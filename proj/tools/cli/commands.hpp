#pragma once

#include <iosfwd>

#include "config.hpp"

namespace ddmap::cli {

// Each command writes its primary output to `out` and throws on failure.
void cmd_simulate(const RunConfig& cfg, std::ostream& out);
void cmd_cobweb(const RunConfig& cfg, std::ostream& out);
void cmd_bifurcate(const RunConfig& cfg, std::ostream& out);
void cmd_fixed_points(const RunConfig& cfg, std::ostream& out);
void cmd_three_cycles(const RunConfig& cfg, std::ostream& out);
void cmd_lyapunov(const RunConfig& cfg, std::ostream& out);
void cmd_trajectory(const RunConfig& cfg, std::ostream& out);
void cmd_ingest(const RunConfig& cfg, std::ostream& out);
void cmd_synth_impacts(const RunConfig& cfg, std::ostream& out);

}  // namespace ddmap::cli

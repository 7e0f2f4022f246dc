#pragma once

#include <string>

#include "pg/engine.hpp"
#include "pg/trace.hpp"

namespace pg {

// DOT text for one snapshot: one node statement per line (position members
// drawn bold with doubled periphery), one edge statement per line with port
// names on the endpoints.
std::string to_dot(const LocatedGraph& lg);

// Writes snap_NNNN.dot files under outdir: the initial graph, then one file
// per trace step in order (an atomic group is one step, so one file).
// Returns the number of files written.
std::size_t export_snapshots(const DerivationTrace& trace, const LocatedGraph& initial,
                             const EngineConfig& cfg, const std::string& outdir);

}  // namespace pg

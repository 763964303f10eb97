#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "restless/model.hpp"
#include "restless/reach.hpp"

namespace restless {

// One couple (S, sigma) of L[u]: a trace and the latest arrival time of a
// restless s->u path having it.
struct TraceEntry {
  Trace trace;
  Time arrival = 0;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

using TraceList = std::vector<TraceEntry>;

struct UnitOptions {
  bool record_paths = false;
  // Drop couples whose waiting time already exceeds the bound (v != s).
  bool prune = false;
  // Zero-delay graphs: arrivals equal departures and each appearance time is
  // relaxed |V^-_tau| times.
  bool non_strict = false;
  // Called after appearance time index i (0-based) with the full table L.
  std::function<void(std::size_t i, Time tau, std::span<const TraceList> table)>
      on_time_processed;
};

// Restricts every trace to F_tau, then keeps one couple per distinct trace
// (the one with the largest arrival), sorted by trace. With `prune_delta`,
// couples whose arrival is more than that bound before tau are dropped.
TraceList cleanup(TraceList entries, Time tau, std::span<const Time> tau_max,
                  std::optional<Time> prune_delta = std::nullopt);

// Nodes reachable from s by a delta_max-restless temporal path, for graphs
// with uniform delay one (or all-zero delays in non-strict mode). Throws
// ModelMismatchError for other delays.
ReachResult solve_unit(const PointTemporalGraph& g, NodeId s, Time delta_max,
                       const UnitOptions& opts = {});

// tau_max per node as used by the clean-up; 0 for isolated nodes.
std::vector<Time> latest_activity(const PointTemporalGraph& g);

}  // namespace restless

#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "restless/model.hpp"

namespace restless {

// Closed activity interval [tau_min, tau_max].
struct ActivityInterval {
  Time tau_min = 0;
  Time tau_max = 0;

  bool contains(Time tau) const noexcept { return tau_min <= tau && tau <= tau_max; }

  friend bool operator==(const ActivityInterval&, const ActivityInterval&) = default;
};

// Per-node and per-underlying-arc activity. A node with no incident arc has
// no interval and is never active.
struct ActivityBounds {
  std::vector<std::optional<ActivityInterval>> nodes;
  std::map<std::pair<NodeId, NodeId>, ActivityInterval> arcs;

  bool node_active(NodeId u, Time tau) const noexcept {
    return u < nodes.size() && nodes[u] && nodes[u]->contains(tau);
  }
};

// Node bounds: earliest appearance / latest arrival over in- and out-arcs.
// Arc bounds: earliest appearance / latest arrival over the arc's copies.
ActivityBounds activity_bounds(const PointTemporalGraph& g);

// Same, with tau_min over interval starts and tau_max over tau_end + delta.
ActivityBounds activity_bounds(const IntervalTemporalGraph& g);

// F_tau: nodes whose activity interval contains tau, ascending.
std::vector<NodeId> active_nodes_at(const ActivityBounds& bounds, Time tau);

// Maximum number of intervals sharing a common instant (closed intervals),
// via an endpoint sweep. 0 for no intervals.
std::size_t max_overlap(std::span<const ActivityInterval> intervals);

std::size_t vertex_im_width(const PointTemporalGraph& g);
std::size_t arc_im_width(const PointTemporalGraph& g);

// Works on the interval bounds directly; never expands the graph.
std::size_t interval_vertex_im_width(const IntervalTemporalGraph& g);

}  // namespace restless

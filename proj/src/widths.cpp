#include "restless/widths.hpp"

#include <algorithm>

namespace restless {

namespace {

void widen(std::optional<ActivityInterval>& slot, Time lo, Time hi) {
  if (!slot) {
    slot = ActivityInterval{lo, hi};
    return;
  }
  slot->tau_min = std::min(slot->tau_min, lo);
  slot->tau_max = std::max(slot->tau_max, hi);
}

void widen(std::map<std::pair<NodeId, NodeId>, ActivityInterval>& arcs, NodeId u, NodeId v,
           Time lo, Time hi) {
  auto [it, inserted] = arcs.try_emplace({u, v}, ActivityInterval{lo, hi});
  if (!inserted) {
    it->second.tau_min = std::min(it->second.tau_min, lo);
    it->second.tau_max = std::max(it->second.tau_max, hi);
  }
}

std::vector<ActivityInterval> present(const std::vector<std::optional<ActivityInterval>>& xs) {
  std::vector<ActivityInterval> out;
  for (const auto& x : xs) {
    if (x) out.push_back(*x);
  }
  return out;
}

}  // namespace

ActivityBounds activity_bounds(const PointTemporalGraph& g) {
  ActivityBounds b;
  b.nodes.resize(g.node_count());
  for (const auto& a : g.arcs()) {
    Time hi = checked_add(a.tau, a.delta).value_or(kTimeMax);
    widen(b.nodes[a.u], a.tau, hi);
    widen(b.nodes[a.v], a.tau, hi);
    widen(b.arcs, a.u, a.v, a.tau, hi);
  }
  return b;
}

ActivityBounds activity_bounds(const IntervalTemporalGraph& g) {
  ActivityBounds b;
  b.nodes.resize(g.node_count());
  for (const auto& a : g.arcs()) {
    Time hi = checked_add(a.tau_end, a.delta).value_or(kTimeMax);
    widen(b.nodes[a.u], a.tau_start, hi);
    widen(b.nodes[a.v], a.tau_start, hi);
    widen(b.arcs, a.u, a.v, a.tau_start, hi);
  }
  return b;
}

std::vector<NodeId> active_nodes_at(const ActivityBounds& bounds, Time tau) {
  std::vector<NodeId> out;
  for (NodeId u = 0; u < bounds.nodes.size(); ++u) {
    if (bounds.node_active(u, tau)) out.push_back(u);
  }
  return out;
}

std::size_t max_overlap(std::span<const ActivityInterval> intervals) {
  // (time, kind): kind 0 opens, kind 1 closes, so opens sort first at equal
  // time and touching closed intervals count as overlapping.
  std::vector<std::pair<Time, int>> events;
  events.reserve(2 * intervals.size());
  for (const auto& iv : intervals) {
    events.emplace_back(iv.tau_min, 0);
    events.emplace_back(iv.tau_max, 1);
  }
  std::sort(events.begin(), events.end());
  std::size_t open = 0, best = 0;
  for (const auto& [time, kind] : events) {
    if (kind == 0) {
      best = std::max(best, ++open);
    } else {
      --open;
    }
  }
  return best;
}

std::size_t vertex_im_width(const PointTemporalGraph& g) {
  auto ivs = present(activity_bounds(g).nodes);
  return max_overlap(ivs);
}

std::size_t arc_im_width(const PointTemporalGraph& g) {
  auto b = activity_bounds(g);
  std::vector<ActivityInterval> ivs;
  ivs.reserve(b.arcs.size());
  for (const auto& [arc, iv] : b.arcs) ivs.push_back(iv);
  return max_overlap(ivs);
}

std::size_t interval_vertex_im_width(const IntervalTemporalGraph& g) {
  auto ivs = present(activity_bounds(g).nodes);
  return max_overlap(ivs);
}

}  // namespace restless

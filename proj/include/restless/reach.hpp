#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "restless/model.hpp"

namespace restless {

// A trace: the still-active nodes of a path, kept as an ascending list.
// Sets compare lexicographically through std::vector's ordering.
using Trace = std::vector<NodeId>;

inline bool trace_contains(const Trace& s, NodeId v) {
  for (NodeId x : s) {
    if (x == v) return true;
    if (x > v) return false;
  }
  return false;
}

// S ∩ F_tau: drops every node whose latest activity lies before tau.
inline Trace restrict_to_active(const Trace& s, Time tau, std::span<const Time> tau_max) {
  Trace out;
  out.reserve(s.size() + 1);
  for (NodeId x : s) {
    if (tau_max[x] >= tau) out.push_back(x);
  }
  return out;
}

// Inserts v keeping the list sorted; v must not already be present.
inline void trace_insert(Trace& s, NodeId v) {
  auto it = s.begin();
  while (it != s.end() && *it < v) ++it;
  s.insert(it, v);
}

// (node, arrival time, trace) identifying a class of restless paths.
struct TraceKey {
  NodeId node = 0;
  Time arrival = 0;
  Trace trace;

  friend auto operator<=>(const TraceKey&, const TraceKey&) = default;
};

// Predecessor record: the prefix class plus the departure time of the last
// arc, so the arc itself is (pred.node, node, departure, arrival - departure).
struct ParentLink {
  TraceKey pred;
  Time departure = 0;
};

struct Anchor {
  Time arrival = 0;
  Trace trace;
};

struct SolveStats {
  // Largest L[v] observed after a clean-up.
  std::size_t peak_table_size = 0;
  // Largest arrival-time set (general solver only).
  std::size_t peak_time_set_size = 0;
  // Most trace shrinks any single stored arrival time went through
  // (general solver only).
  std::size_t max_time_shrinks = 0;
  std::size_t extensions = 0;
};

struct ReachResult {
  NodeId source = 0;
  Time delta_max = 0;
  std::vector<bool> reachable;

  bool has_records = false;
  std::vector<std::optional<Anchor>> arr;
  std::map<TraceKey, ParentLink> parent;

  SolveStats stats;

  std::vector<NodeId> reachable_nodes() const;
};

// Walks parent links back from Arr[v]. Throws NoPathError when v is not
// reachable and RetrievalMisuseError when the result carries no records or
// was computed for another source or waiting bound. `parent_lookups`, when
// given, receives the number of parent-map queries performed.
TemporalPath retrieve_path(const ReachResult& result, const PointTemporalGraph& g, NodeId s,
                           NodeId v, Time delta_max, std::size_t* parent_lookups = nullptr);

}  // namespace restless

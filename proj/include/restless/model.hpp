#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace restless {

using NodeId = std::uint32_t;
using Time = std::uint64_t;

inline constexpr Time kTimeMax = std::numeric_limits<Time>::max();

// Directed timed arc (u, v, tau, delta): leave u at tau, reach v at tau + delta.
struct TimedArc {
  NodeId u = 0;
  NodeId v = 0;
  Time tau = 0;
  Time delta = 1;

  Time arrival() const noexcept { return tau + delta; }

  friend auto operator<=>(const TimedArc&, const TimedArc&) = default;
};

// Interval timed arc: departure allowed at any time in [tau_start, tau_end].
struct IntervalTimedArc {
  NodeId u = 0;
  NodeId v = 0;
  Time tau_start = 0;
  Time tau_end = 0;
  Time delta = 1;

  friend auto operator<=>(const IntervalTimedArc&, const IntervalTimedArc&) = default;
};

// Point-model temporal graph. Immutable after construction.
//
// The regular constructor stable-sorts arcs by appearance time. `unsorted`
// keeps the caller's order so that validation can report it.
class PointTemporalGraph {
 public:
  PointTemporalGraph() = default;
  PointTemporalGraph(std::size_t n, std::vector<TimedArc> arcs, bool non_strict = false);

  static PointTemporalGraph unsorted(std::size_t n, std::vector<TimedArc> arcs,
                                     bool non_strict = false);

  std::size_t node_count() const noexcept { return n_; }
  std::span<const TimedArc> arcs() const noexcept { return arcs_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  // max(tau + delta) over arcs; 0 for an arc-less graph. Saturates at
  // kTimeMax when an arrival overflows (validation reports that case).
  Time lifetime() const noexcept { return lifetime_; }

  bool uniform_delay_one() const noexcept { return uniform_delay_one_; }
  bool all_delays_zero() const noexcept { return all_delays_zero_; }
  bool non_strict() const noexcept { return non_strict_; }
  bool is_sorted() const noexcept { return sorted_; }

  friend bool operator==(const PointTemporalGraph& a, const PointTemporalGraph& b) {
    return a.n_ == b.n_ && a.non_strict_ == b.non_strict_ && a.arcs_ == b.arcs_;
  }

 private:
  void compute_summary();

  std::size_t n_ = 0;
  std::vector<TimedArc> arcs_;
  Time lifetime_ = 0;
  bool uniform_delay_one_ = true;
  bool all_delays_zero_ = true;
  bool non_strict_ = false;
  bool sorted_ = true;
};

class IntervalTemporalGraph {
 public:
  IntervalTemporalGraph() = default;
  IntervalTemporalGraph(std::size_t n, std::vector<IntervalTimedArc> arcs);

  std::size_t node_count() const noexcept { return n_; }
  std::span<const IntervalTimedArc> arcs() const noexcept { return arcs_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  // max(tau_end + delta); saturating like PointTemporalGraph::lifetime.
  Time lifetime() const noexcept { return lifetime_; }

  friend bool operator==(const IntervalTemporalGraph& a, const IntervalTemporalGraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<IntervalTimedArc> arcs_;
  Time lifetime_ = 0;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate_point_graph(const PointTemporalGraph& g);
ValidationReport validate_interval_graph(const IntervalTemporalGraph& g);

// Throws ValidationError carrying the report summary when invalid.
void require_valid(const PointTemporalGraph& g);
void require_valid(const IntervalTemporalGraph& g);

struct TemporalPath {
  std::vector<TimedArc> arcs;

  std::size_t length() const noexcept { return arcs.size(); }
  bool empty() const noexcept { return arcs.empty(); }
  // v_0, ..., v_l; `source` is returned alone for the empty path.
  std::vector<NodeId> nodes(NodeId source) const;

  friend bool operator==(const TemporalPath&, const TemporalPath&) = default;
};

// Interval-model witness: one chosen departure per interval arc.
struct IntervalTemporalPath {
  std::vector<IntervalTimedArc> arcs;
  std::vector<Time> departures;

  friend bool operator==(const IntervalTemporalPath&, const IntervalTemporalPath&) = default;
};

// True iff `path` is a delta_max-restless temporal s->t path. Arcs must be
// members of g (as a multiset); otherwise ArcNotInGraphError is thrown.
bool check_restless_path(const PointTemporalGraph& g, const TemporalPath& path, NodeId s,
                         NodeId t, Time delta_max);

bool check_interval_restless_path(const IntervalTemporalGraph& g,
                                  const IntervalTemporalPath& path, NodeId s, NodeId t,
                                  Time delta_max);

struct StaticDigraph {
  std::size_t n = 0;
  std::vector<std::pair<NodeId, NodeId>> arcs;  // sorted, unique

  friend bool operator==(const StaticDigraph&, const StaticDigraph&) = default;
};

StaticDigraph underlying_graph(const PointTemporalGraph& g);
StaticDigraph underlying_graph(const IntervalTemporalGraph& g);

inline constexpr std::size_t kDefaultExpansionCap = 10'000'000;

// Instantiates every departure time of every interval arc. Overlapping
// intervals sharing (u, v, delta) yield each point arc once. Throws
// ResourceGuardError when the output would exceed `cap` arcs.
PointTemporalGraph expand_interval_to_point(const IntervalTemporalGraph& g,
                                            std::size_t cap = kDefaultExpansionCap);

// Lifts a witness found on the expansion back to the interval graph: each
// point arc maps to an interval arc containing its appearance time.
IntervalTemporalPath to_interval_path(const IntervalTemporalGraph& g, const TemporalPath& path);

// (G, s, t, Delta) plus optional node labels (index = node id).
struct PointInstance {
  PointTemporalGraph graph;
  NodeId source = 0;
  std::optional<NodeId> target;
  Time delta_max = 0;
  std::vector<std::string> labels;
};

struct IntervalInstance {
  IntervalTemporalGraph graph;
  NodeId source = 0;
  std::optional<NodeId> target;
  Time delta_max = 0;
  std::vector<std::string> labels;
};

// a + b, or nullopt on overflow.
inline std::optional<Time> checked_add(Time a, Time b) noexcept {
  Time r;
  if (__builtin_add_overflow(a, b, &r)) return std::nullopt;
  return r;
}

// tau - sigma <= delta_max for sigma <= tau, without unsigned wraparound.
inline bool wait_within(Time sigma, Time tau, Time delta_max) noexcept {
  return tau <= sigma || tau - sigma <= delta_max;
}

}  // namespace restless

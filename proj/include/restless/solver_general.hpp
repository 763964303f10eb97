#pragma once

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "restless/model.hpp"
#include "restless/reach.hpp"

namespace restless {

// Ordered set of arrival times for one (node, trace) pair.
//
// Each stored time also tracks how many times the trace owning it has
// shrunk since the time was inserted. The count is kept relative to a
// per-set offset so shrinking a whole set is O(1).
class TimeSet {
 public:
  TimeSet() = default;

  std::size_t size() const noexcept { return times_.size(); }
  bool empty() const noexcept { return times_.empty(); }
  bool contains(Time t) const { return times_.contains(t); }

  // No-op when already present.
  void insert(Time t) {
    if (times_.try_emplace(t, -offset_).second) max_rel_ = std::max(max_rel_, -offset_);
  }

  // Largest stored time <= tau.
  std::optional<Time> predecessor(Time tau) const;

  // Drops every time strictly below `lower`.
  void erase_below(Time lower);

  // Records that the owning trace lost at least one node.
  void mark_shrunk() noexcept { ++offset_; }

  // Moves all times of `other` into *this, skipping those already present.
  // Iterates the smaller set into the larger one.
  void merge(TimeSet&& other);

  // Largest shrink count of any time ever stored here, including times
  // since erased.
  std::size_t max_shrinks() const noexcept;

  std::vector<Time> to_vector() const;

  friend bool operator==(const TimeSet& a, const TimeSet& b) {
    return a.to_vector() == b.to_vector();
  }

 private:
  std::map<Time, std::int32_t> times_;
  std::int32_t offset_ = 0;
  std::int32_t max_rel_ = std::numeric_limits<std::int32_t>::min() / 2;
};

// L[v] of the general solver: trace -> arrival times, lexicographic on traces.
using GeneralTraceList = std::map<Trace, TimeSet>;

struct GeneralOptions {
  bool record_paths = false;
  // Discard stored times more than delta_max before the current time.
  bool prune = false;
  // Called after appearance time index i (0-based) with the full table L.
  std::function<void(std::size_t i, Time tau, std::span<const GeneralTraceList> table)>
      on_time_processed;
};

// Restricts every trace to F_tau. Traces that collapse onto the same
// restricted trace get their time sets merged. With `prune_lower`, times
// below that bound are removed and emptied traces dropped.
void cleanup_delay(GeneralTraceList& entries, Time tau, std::span<const Time> tau_max,
                   std::optional<Time> prune_lower = std::nullopt);

// Nodes reachable from s by a delta_max-restless temporal path, for any
// positive delays. Throws ModelMismatchError on zero delays.
ReachResult solve_general(const PointTemporalGraph& g, NodeId s, Time delta_max,
                          const GeneralOptions& opts = {});

// Path retrieval for general-delay results; same mechanics as retrieve_path.
TemporalPath retrieve_path_general(const ReachResult& result, const PointTemporalGraph& g,
                                   NodeId s, NodeId v, Time delta_max,
                                   std::size_t* parent_lookups = nullptr);

}  // namespace restless

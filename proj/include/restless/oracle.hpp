#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "restless/cnf.hpp"
#include "restless/model.hpp"
#include "restless/reach.hpp"

namespace restless {

// Exhaustive ground truth for tests. Everything here is exponential; the
// guards below are hard limits, never silent truncation.

struct OracleOptions {
  // Permit zero-delay arcs (chaining then only needs tau_i <= tau_{i+1}).
  bool non_strict = false;
  std::size_t max_nodes = 12;
  std::size_t max_arcs = 40;
};

struct OracleResult {
  std::vector<bool> reachable;
  std::vector<std::optional<TemporalPath>> witness;
};

// Depth-first enumeration of all restless paths from s.
OracleResult oracle_reachable(const PointTemporalGraph& g, NodeId s, Time delta_max,
                              const OracleOptions& opts = {});

// For the i-th appearance time tau_i (0-based index into the sorted
// distinct appearance times): every delta_max-restless s->u path using only
// arcs that appear no later than tau_i, projected to its trace at the last
// appearance time of an arc into u. Maps trace -> all arrival times.
// For u == s the single trace {s} carries every appearance time up to tau_i
// (the start convention).
std::map<Trace, std::set<Time>> oracle_trace_arrivals(const PointTemporalGraph& g, NodeId s,
                                                      Time delta_max, std::size_t i, NodeId u,
                                                      const OracleOptions& opts = {});

// Same projection keeping only the latest arrival per trace; for u == s the
// result is {({s}, tau_i)}.
std::map<Trace, Time> oracle_traces(const PointTemporalGraph& g, NodeId s, Time delta_max,
                                    std::size_t i, NodeId u, const OracleOptions& opts = {});

inline constexpr std::size_t kSubsetSumMaxItems = 24;
inline constexpr std::size_t kSatMaxVariables = 20;

bool subset_sum_bruteforce(const std::vector<std::uint64_t>& xs, std::uint64_t target);

// Truth-table search. With `require_exact_34`, formulas outside the exact
// (3,4) shape are rejected with ValidationError.
bool sat_bruteforce(const CnfFormula& f, bool require_exact_34 = false);

}  // namespace restless

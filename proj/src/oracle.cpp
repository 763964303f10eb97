#include "restless/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>

#include "restless/errors.hpp"
#include "restless/widths.hpp"

namespace restless {

namespace {

void guard(const PointTemporalGraph& g, NodeId s, const OracleOptions& opts) {
  require_valid(g);
  if (s >= g.node_count()) throw ValidationError("source is out of range");
  if (g.node_count() > opts.max_nodes || g.arc_count() > opts.max_arcs) {
    throw ResourceGuardError("oracle refuses graphs beyond " + std::to_string(opts.max_nodes) +
                             " nodes or " + std::to_string(opts.max_arcs) + " arcs (got " +
                             std::to_string(g.node_count()) + " nodes, " +
                             std::to_string(g.arc_count()) + " arcs)");
  }
  if (!opts.non_strict) {
    for (const auto& a : g.arcs()) {
      if (a.delta == 0) throw ModelMismatchError("zero-delay arc outside non-strict mode");
    }
  }
}

// Calls `visit(path)` once for every restless path from s with at least one
// arc, using only arcs that appear no later than `horizon`.
class PathEnumerator {
 public:
  using Visitor = std::function<void(const std::vector<TimedArc>&)>;

  PathEnumerator(const PointTemporalGraph& g, Time delta_max, Time horizon)
      : delta_max_(delta_max), out_(g.node_count()), visited_(g.node_count(), false) {
    for (const auto& a : g.arcs()) {
      if (a.tau <= horizon) out_[a.u].push_back(a);
    }
    for (auto& arcs : out_) {
      std::stable_sort(arcs.begin(), arcs.end(),
                       [](const TimedArc& a, const TimedArc& b) { return a.tau < b.tau; });
    }
  }

  void run(NodeId s, const Visitor& visit) {
    visited_[s] = true;
    extend(s, std::nullopt, visit);
    visited_[s] = false;
  }

 private:
  void extend(NodeId node, std::optional<Time> arrival, const Visitor& visit) {
    for (const auto& a : out_[node]) {
      if (arrival) {
        if (a.tau < *arrival) continue;
        if (!wait_within(*arrival, a.tau, delta_max_)) break;
      }
      if (visited_[a.v]) continue;
      visited_[a.v] = true;
      path_.push_back(a);
      visit(path_);
      extend(a.v, a.arrival(), visit);
      path_.pop_back();
      visited_[a.v] = false;
    }
  }

  Time delta_max_;
  std::vector<std::vector<TimedArc>> out_;
  std::vector<bool> visited_;
  std::vector<TimedArc> path_;
};

std::vector<Time> appearance_times(const PointTemporalGraph& g) {
  std::vector<Time> times;
  for (const auto& a : g.arcs()) times.push_back(a.tau);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

}  // namespace

OracleResult oracle_reachable(const PointTemporalGraph& g, NodeId s, Time delta_max,
                              const OracleOptions& opts) {
  guard(g, s, opts);
  OracleResult res;
  res.reachable.assign(g.node_count(), false);
  res.witness.assign(g.node_count(), std::nullopt);
  res.reachable[s] = true;
  res.witness[s] = TemporalPath{};
  PathEnumerator walker(g, delta_max, kTimeMax);
  walker.run(s, [&](const std::vector<TimedArc>& path) {
    NodeId v = path.back().v;
    if (!res.reachable[v]) {
      res.reachable[v] = true;
      res.witness[v] = TemporalPath{path};
    }
  });
  return res;
}

std::map<Trace, std::set<Time>> oracle_trace_arrivals(const PointTemporalGraph& g, NodeId s,
                                                      Time delta_max, std::size_t i, NodeId u,
                                                      const OracleOptions& opts) {
  guard(g, s, opts);
  const auto times = appearance_times(g);
  if (i >= times.size()) throw std::out_of_range("appearance time index out of range");
  if (u >= g.node_count()) throw std::out_of_range("node out of range");
  const Time horizon = times[i];

  std::map<Trace, std::set<Time>> out;
  if (u == s) {
    auto& starts = out[Trace{s}];
    starts.insert(times.begin(), times.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    return out;
  }

  std::optional<Time> last_in;
  for (const auto& a : g.arcs()) {
    if (a.v == u && a.tau <= horizon) last_in = std::max(last_in.value_or(0), a.tau);
  }
  if (!last_in) return out;

  const auto bounds = activity_bounds(g);
  PathEnumerator walker(g, delta_max, horizon);
  walker.run(s, [&](const std::vector<TimedArc>& path) {
    if (path.back().v != u) return;
    Trace trace;
    if (bounds.node_active(s, *last_in)) trace.push_back(s);
    for (const auto& a : path) {
      if (bounds.node_active(a.v, *last_in)) trace.push_back(a.v);
    }
    std::sort(trace.begin(), trace.end());
    out[trace].insert(path.back().arrival());
  });
  return out;
}

std::map<Trace, Time> oracle_traces(const PointTemporalGraph& g, NodeId s, Time delta_max,
                                    std::size_t i, NodeId u, const OracleOptions& opts) {
  std::map<Trace, Time> out;
  for (const auto& [trace, arrivals] : oracle_trace_arrivals(g, s, delta_max, i, u, opts)) {
    out.emplace(trace, *arrivals.rbegin());
  }
  return out;
}

bool subset_sum_bruteforce(const std::vector<std::uint64_t>& xs, std::uint64_t target) {
  if (xs.size() > kSubsetSumMaxItems) {
    throw ResourceGuardError("subset-sum brute force limited to " +
                             std::to_string(kSubsetSumMaxItems) + " items");
  }
  const std::uint64_t subsets = std::uint64_t{1} << xs.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    unsigned __int128 sum = 0;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (mask >> j & 1) sum += xs[j];
    }
    if (sum == target) return true;
  }
  return false;
}

bool sat_bruteforce(const CnfFormula& f, bool require_exact_34) {
  if (f.variables > kSatMaxVariables) {
    throw ResourceGuardError("SAT brute force limited to " + std::to_string(kSatMaxVariables) +
                             " variables");
  }
  if (require_exact_34) {
    auto report = validate_exact_34(f);
    if (!report.ok()) throw ValidationError("not an exact (3,4) formula: " + report.summary());
  }
  for (const auto& clause : f.clauses) {
    for (int lit : clause) {
      if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > f.variables) {
        throw ValidationError("literal " + std::to_string(lit) + " out of range");
      }
    }
  }
  const std::uint64_t assignments = std::uint64_t{1} << f.variables;
  for (std::uint64_t mask = 0; mask < assignments; ++mask) {
    bool all = true;
    for (const auto& clause : f.clauses) {
      bool any = false;
      for (int lit : clause) {
        bool value = mask >> (std::abs(lit) - 1) & 1;
        if (value == (lit > 0)) {
          any = true;
          break;
        }
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace restless

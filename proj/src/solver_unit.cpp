#include "restless/solver_unit.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "restless/errors.hpp"

namespace restless {

std::vector<Time> latest_activity(const PointTemporalGraph& g) {
  std::vector<Time> tau_max(g.node_count(), 0);
  for (const auto& a : g.arcs()) {
    Time hi = checked_add(a.tau, a.delta).value_or(kTimeMax);
    tau_max[a.u] = std::max(tau_max[a.u], hi);
    tau_max[a.v] = std::max(tau_max[a.v], hi);
  }
  return tau_max;
}

TraceList cleanup(TraceList entries, Time tau, std::span<const Time> tau_max,
                  std::optional<Time> prune_delta) {
  if (prune_delta) {
    std::erase_if(entries, [&](const TraceEntry& e) {
      return !wait_within(e.arrival, tau, *prune_delta);
    });
  }
  for (auto& e : entries) {
    std::erase_if(e.trace, [&](NodeId x) { return tau_max[x] < tau; });
  }
  std::sort(entries.begin(), entries.end(), [](const TraceEntry& a, const TraceEntry& b) {
    if (a.trace != b.trace) return a.trace < b.trace;
    return a.arrival > b.arrival;
  });
  auto last = std::unique(entries.begin(), entries.end(),
                          [](const TraceEntry& a, const TraceEntry& b) {
                            return a.trace == b.trace;
                          });
  entries.erase(last, entries.end());
  return entries;
}

namespace {

void check_source(const PointTemporalGraph& g, NodeId s) {
  if (s >= g.node_count()) {
    throw ValidationError("source " + std::to_string(s) + " is out of range");
  }
}

}  // namespace

ReachResult solve_unit(const PointTemporalGraph& g, NodeId s, Time delta_max,
                       const UnitOptions& opts) {
  require_valid(g);
  check_source(g, s);
  if (opts.non_strict) {
    if (!g.all_delays_zero()) {
      throw ModelMismatchError("non-strict mode needs every delay to be zero");
    }
  } else if (!g.uniform_delay_one()) {
    throw ModelMismatchError(
        "graph does not have uniform delay one; use the general-delay solver");
  }

  const std::size_t n = g.node_count();
  const auto tau_max = latest_activity(g);
  const Time step = opts.non_strict ? 0 : 1;
#ifndef NDEBUG
  std::vector<Time> tau_min(n, kTimeMax);
  for (const auto& a : g.arcs()) {
    tau_min[a.u] = std::min(tau_min[a.u], a.tau);
    tau_min[a.v] = std::min(tau_min[a.v], a.tau);
  }
#endif

  ReachResult result;
  result.source = s;
  result.delta_max = delta_max;
  result.reachable.assign(n, false);
  result.reachable[s] = true;
  result.has_records = opts.record_paths;
  if (opts.record_paths) result.arr.assign(n, std::nullopt);

  std::vector<TraceList> table(n);
  std::vector<TraceList> staged(n);
  std::vector<bool> is_head(n, false);
  std::vector<NodeId> heads;

  const auto arcs = g.arcs();
  std::size_t time_index = 0;
  for (std::size_t begin = 0; begin < arcs.size(); ++time_index) {
    const Time tau = arcs[begin].tau;
    std::size_t end = begin;
    while (end < arcs.size() && arcs[end].tau == tau) ++end;
    const auto batch = arcs.subspan(begin, end - begin);

    heads.clear();
    for (const auto& a : batch) {
      if (!is_head[a.v]) {
        is_head[a.v] = true;
        heads.push_back(a.v);
      }
    }

    table[s] = {TraceEntry{{s}, tau}};

    const std::size_t rounds = opts.non_strict ? heads.size() : 1;
    for (std::size_t round = 0; round < rounds; ++round) {
      for (const auto& a : batch) {
        for (const auto& [trace, sigma] : table[a.u]) {
          if (trace_contains(trace, a.v) || !wait_within(sigma, tau, delta_max)) continue;
          Trace next = restrict_to_active(trace, tau, tau_max);
          trace_insert(next, a.v);
          const Time arrival = tau + step;
          if (opts.record_paths) {
            result.parent.try_emplace(TraceKey{a.v, arrival, next},
                                      ParentLink{TraceKey{a.u, sigma, trace}, tau});
            result.arr[a.v] = Anchor{arrival, next};
          }
          staged[a.v].push_back({std::move(next), arrival});
          result.reachable[a.v] = true;
          ++result.stats.extensions;
        }
      }

      for (NodeId v : heads) {
        auto& list = table[v];
        for (auto& e : staged[v]) list.push_back(std::move(e));
        staged[v].clear();

        if (opts.record_paths) {
          // Later lookups use the cleaned trace; alias it to the same parent.
          for (const auto& e : list) {
            Trace cleaned = restrict_to_active(e.trace, tau, tau_max);
            if (cleaned == e.trace) continue;
            auto it = result.parent.find(TraceKey{v, e.arrival, e.trace});
            if (it == result.parent.end()) continue;
            ParentLink link = it->second;
            result.parent.try_emplace(TraceKey{v, e.arrival, std::move(cleaned)},
                                      std::move(link));
          }
        }

        std::optional<Time> prune;
        if (opts.prune && v != s) prune = delta_max;
        list = cleanup(std::move(list), tau, tau_max, prune);
        result.stats.peak_table_size = std::max(result.stats.peak_table_size, list.size());
#ifndef NDEBUG
        std::size_t active = 0;
        for (NodeId x = 0; x < n; ++x) active += (tau_min[x] <= tau && tau <= tau_max[x]) ? 1 : 0;
        assert(active >= 63 || list.size() <= (std::size_t{1} << active));
#endif
      }
    }

    for (NodeId v : heads) is_head[v] = false;
    if (opts.on_time_processed) opts.on_time_processed(time_index, tau, table);
    begin = end;
  }
  return result;
}

}  // namespace restless
